#include "gbds/system.hpp"

#include <algorithm>
#include <set>

namespace gbds {

System::System(BooleanAlgebra algebra, std::vector<Action> actions,
               std::vector<Element> ideal_gens)
    : algebra_(std::move(algebra)), actions_(std::move(actions)) {
  if (actions_.size() > 0xFFFF) throw StructuralError("too many labels");
  std::set<std::string_view> seen;
  for (const auto& act : actions_) {
    if (act.label.empty()) throw StructuralError("label names must be nonempty");
    if (!seen.insert(act.label).second) {
      throw StructuralError("duplicate label '" + act.label + "'");
    }
    if (act.atom_image.size() != algebra_.size()) {
      throw StructuralError("action " + act.label + " must give one image per atom");
    }
    for (const auto& img : act.atom_image) algebra_.require(img);
    if (act.label.size() > 1) dotted_ = true;
  }

  if (ideal_gens.empty()) {
    for (LabelId l = 0; l < actions_.size(); ++l) {
      ideal_gens_.push_back(apply(l, algebra_.unit()));
    }
  } else {
    if (ideal_gens.size() != actions_.size()) {
      throw StructuralError("one ideal generator per label is required");
    }
    for (const auto& g : ideal_gens) algebra_.require(g);
    ideal_gens_ = std::move(ideal_gens);
  }

  pre_.assign(actions_.size(), std::vector<int>(algebra_.size(), -1));
  for (LabelId l = 0; l < actions_.size(); ++l) {
    for (AtomId a = 0; a < algebra_.size(); ++a) {
      for (AtomId c : actions_[l].atom_image[a].atoms()) {
        if (pre_[l][c] < 0) pre_[l][c] = static_cast<int>(a);
      }
    }
  }
  valid_ = validate().ok();
}

const std::string& System::label_name(LabelId l) const { return action(l).label; }

std::optional<LabelId> System::find_label(std::string_view name) const {
  for (LabelId l = 0; l < actions_.size(); ++l) {
    if (actions_[l].label == name) return l;
  }
  return std::nullopt;
}

LabelId System::label_id(std::string_view name) const {
  if (auto l = find_label(name)) return *l;
  throw StructuralError("unknown label '" + std::string(name) + "'");
}

const Action& System::action(LabelId l) const {
  if (l >= actions_.size()) throw StructuralError("label index out of range");
  return actions_[l];
}

const Element& System::ideal_gen(LabelId l) const {
  if (l >= actions_.size()) throw StructuralError("label index out of range");
  return ideal_gens_[l];
}

Element System::apply(LabelId l, const Element& a) const {
  const Action& act = action(l);
  algebra_.require(a);
  Element out = algebra_.empty();
  for (AtomId x : a.atoms()) out = out | act.atom_image[x];
  return out;
}

Element System::apply_word(const Word& w, const Element& a) const {
  Element cur = a;
  for (std::size_t i = 0; i < w.size() && !cur.empty(); ++i) cur = apply(w[i], cur);
  if (cur.empty()) {
    for (std::size_t i = 0; i < w.size(); ++i) action(w[i]);  // label check
  }
  return cur;
}

std::vector<LabelId> System::delta(const Element& a) const {
  std::vector<LabelId> out;
  for (LabelId l = 0; l < actions_.size(); ++l) {
    if (!apply(l, a).empty()) out.push_back(l);
  }
  return out;
}

bool System::is_regular(const Element& a) const {
  algebra_.require(a);
  for (AtomId x : a.atoms()) {
    if (is_singular_atom(x)) return false;
  }
  return true;
}

Ideal System::range_ideal(LabelId l) const { return Ideal{apply(l, algebra_.unit())}; }

Element System::word_gen(const Word& w) const {
  if (w.empty()) return algebra_.unit();
  return apply_word(w.sub(1), ideal_gen(w[0]));
}

std::vector<Word> System::wstar(std::size_t maxlen) const {
  std::vector<Word> out{Word{}};
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= maxlen; ++len) {
    std::vector<Word> next;
    for (const Word& w : layer) {
      for (LabelId l = 0; l < actions_.size(); ++l) {
        Word ext = w;
        ext.push_back(l);
        if (in_wstar(ext)) next.push_back(std::move(ext));
      }
    }
    // A word outside W* has no extension inside it: θ(∅) = ∅.
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

Report System::validate() const {
  Report r("system");
  r.fact("atoms", std::to_string(algebra_.size()));
  r.fact("labels", std::to_string(actions_.size()));
  const bool exhaustive = algebra_.size() <= 8;
  for (LabelId l = 0; l < actions_.size(); ++l) {
    const Action& act = actions_[l];
    const std::string& name = act.label;

    std::string overlap;
    for (AtomId a = 0; a < algebra_.size() && overlap.empty(); ++a) {
      for (AtomId b = a + 1; b < algebra_.size(); ++b) {
        if (!(act.atom_image[a] & act.atom_image[b]).empty()) {
          overlap = "images of atoms " + algebra_.atom_name(a) + " and " +
                    algebra_.atom_name(b) + " overlap";
          break;
        }
      }
    }
    r.check("disjoint images θ_" + name, overlap.empty(), overlap);

    if (exhaustive) {
      Tally hom("homomorphism θ_" + name);
      auto elems = algebra_.elements();
      hom.add(apply(l, algebra_.empty()).empty(), [] { return "θ(∅) ≠ ∅"; });
      for (const auto& a : elems) {
        for (const auto& b : elems) {
          Element ta = apply(l, a), tb = apply(l, b);
          bool ok = apply(l, a & b) == (ta & tb) && apply(l, a | b) == (ta | tb) &&
                    apply(l, a - b) == (ta - tb);
          hom.add(ok, [&] {
            return "fails on " + algebra_.format(a) + ", " + algebra_.format(b);
          });
        }
      }
      hom.emit(r);
    } else {
      r.check("homomorphism θ_" + name, overlap.empty(),
              "implied by disjoint atom images (more than 8 atoms)");
    }

    Element range = apply(l, algebra_.unit());
    bool contained = leq(range, ideal_gens_[l]);
    r.check("R_" + name + " ⊆ I_" + name, contained,
            contained ? "" : "R_" + name + " ⊄ I_" + name + ": R_" + name + " = " +
                                 algebra_.format(range) + ", I_" + name + " = ↓" +
                                 algebra_.format(ideal_gens_[l]));
  }
  return r;
}

void System::require_valid() const {
  if (valid_) return;
  Report r = validate();
  const ReportEntry* f = r.first_failure();
  throw PreconditionError("invalid system: " + f->key + (f->value.empty() ? "" : " (" + f->value + ")"));
}

std::optional<AtomId> System::pre(LabelId l, AtomId c) const {
  if (l >= pre_.size() || c >= algebra_.size()) throw StructuralError("index out of range");
  int p = pre_[l][c];
  if (p < 0) return std::nullopt;
  return static_cast<AtomId>(p);
}

Element System::pre_image(LabelId l, const Element& g) const {
  std::uint64_t bits = 0;
  for (AtomId c : g.atoms()) {
    if (auto p = pre(l, c)) bits |= std::uint64_t{1} << *p;
  }
  return algebra_.from_bits(bits);
}

bool System::has_full_pre(LabelId l, const Element& g) const {
  for (AtomId c : g.atoms()) {
    if (!pre(l, c)) return false;
  }
  return true;
}

bool System::is_singular_atom(AtomId a) const {
  for (const auto& act : actions_) {
    if (!act.atom_image.at(a).empty()) return false;
  }
  return true;
}

Element System::singular_atoms() const {
  std::uint64_t bits = 0;
  for (AtomId a = 0; a < algebra_.size(); ++a) {
    if (is_singular_atom(a)) bits |= std::uint64_t{1} << a;
  }
  return algebra_.from_bits(bits);
}

bool System::has_empty_range_edges() const {
  for (LabelId l = 0; l < actions_.size(); ++l) {
    if (!has_full_pre(l, ideal_gens_[l])) return true;
  }
  return false;
}

std::string System::format_word(const Word& w) const {
  if (w.empty()) return "ε";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dotted_ && i != 0) out += '.';
    out += label_name(w[i]);
  }
  return out;
}

Word System::parse_word(std::string_view text) const {
  Word w;
  if (text.empty() || text == "ε" || text == "eps") return w;
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      if (dot == std::string_view::npos) dot = text.size();
      w.push_back(label_id(text.substr(start, dot - start)));
      start = dot + 1;
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t best = 0;
    LabelId best_id = 0;
    for (LabelId l = 0; l < actions_.size(); ++l) {
      const std::string& n = actions_[l].label;
      if (n.size() > best && text.substr(pos, n.size()) == n) {
        best = n.size();
        best_id = l;
      }
    }
    if (best == 0) {
      throw StructuralError("cannot read a label at '" + std::string(text.substr(pos)) + "'");
    }
    w.push_back(best_id);
    pos += best;
  }
  return w;
}

}  // namespace gbds

namespace gbds {

System random_system(std::mt19937_64& rng, std::size_t max_atoms, std::size_t max_labels) {
  if (max_atoms == 0 || max_labels == 0 || max_labels > 26) throw PreconditionError("bad random system bounds");
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_atoms)(rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_labels)(rng);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  BooleanAlgebra alg(names);
  std::uniform_int_distribution<std::size_t> source(0, n);  // n means no preimage
  std::bernoulli_distribution coin(0.5);
  std::vector<Action> actions;
  std::vector<Element> ideals;
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<std::vector<AtomId>> images(n);
    std::vector<AtomId> range, extra;
    for (AtomId c = 0; c < n; ++c) {
      const std::size_t s = source(rng);
      if (s < n) {
        images[s].push_back(c);
        range.push_back(c);
      }
      if (coin(rng)) extra.push_back(c);
    }
    Action a{std::string(1, static_cast<char>('a' + l)), {}};
    for (const auto& img : images) a.atom_image.push_back(alg.from_atoms(img));
    actions.push_back(std::move(a));
    ideals.push_back(alg.from_atoms(range) | alg.from_atoms(extra));
  }
  return System(alg, std::move(actions), std::move(ideals));
}

}  // namespace gbds
