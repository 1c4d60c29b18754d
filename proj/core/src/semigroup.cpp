#include "gbds/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gbds {

LabelId FilterE::letter(std::size_t n) const {
  if (n == 0) throw PreconditionError("letters are 1-based");
  if (n <= word.size()) return word[n - 1];
  if (cycle.empty()) throw PreconditionError("letter beyond a finite word");
  return cycle[(n - word.size() - 1) % cycle.size()];
}

const Element& FilterE::generator(std::size_t n) const {
  if (n < family.size()) return family[n];
  if (cycle.empty()) throw PreconditionError("generator beyond a finite word");
  return family[word.size() + 1 + (n - word.size() - 1) % cycle.size()];
}

Semigroup::Semigroup(System sys) : sys_(std::move(sys)) {}

SgElem Semigroup::make(const Word& alpha, const Element& a, const Word& beta) const {
  sys_.algebra().require(a);
  if (a.empty()) throw PreconditionError("(α, A, β) needs A ≠ ∅");
  if (!leq(a, sys_.word_gen(alpha)) || !leq(a, sys_.word_gen(beta))) {
    throw PreconditionError("(α, A, β) needs A ∈ I_α ∩ I_β");
  }
  return {false, alpha, a, beta};
}

SgElem Semigroup::multiply(const SgElem& s, const SgElem& t) const {
  if (s.zero || t.zero) return SgElem::Zero();
  const Word& beta = s.beta;
  const Word& gamma = t.alpha;
  if (beta == gamma) {
    Element m = s.set & t.set;
    if (m.empty()) return SgElem::Zero();
    return {false, s.alpha, m, t.beta};
  }
  if (gamma.starts_with(beta)) {
    Word rest = gamma.sub(beta.size());
    Element m = sys_.apply_word(rest, s.set) & t.set;
    if (m.empty()) return SgElem::Zero();
    return {false, s.alpha + rest, m, t.beta};
  }
  if (beta.starts_with(gamma)) {
    Word rest = beta.sub(gamma.size());
    Element m = s.set & sys_.apply_word(rest, t.set);
    if (m.empty()) return SgElem::Zero();
    return {false, s.alpha, m, t.beta + rest};
  }
  return SgElem::Zero();
}

SgElem Semigroup::star(const SgElem& s) {
  if (s.zero) return s;
  return {false, s.beta, s.set, s.alpha};
}

bool Semigroup::idempotent_leq(const SgElem& e, const SgElem& f) const {
  if (!e.is_idempotent() || !f.is_idempotent()) {
    throw StructuralError("natural order is only defined on idempotents");
  }
  if (e.zero) return true;
  if (f.zero) return false;
  if (!e.alpha.starts_with(f.alpha)) return false;
  Word rest = e.alpha.sub(f.alpha.size());
  return leq(e.set, sys_.apply_word(rest, f.set));
}

std::vector<SgElem> Semigroup::enumerate(std::size_t maxlen) const {
  std::vector<SgElem> out;
  auto words = sys_.wstar(maxlen);
  for (const Word& a : words) {
    for (const Word& b : words) {
      Element bound = sys_.word_gen(a) & sys_.word_gen(b);
      for (const Element& x : sys_.algebra().elements_below(bound)) {
        if (!x.empty()) out.push_back({false, a, x, b});
      }
    }
  }
  return out;
}

std::string Semigroup::format(const SgElem& s) const {
  if (s.zero) return "0";
  return "(" + sys_.format_word(s.alpha) + "," + sys_.format(s.set) + "," +
         sys_.format_word(s.beta) + ")";
}

namespace {

std::string index_note(std::size_t n) { return "F_" + std::to_string(n); }

}  // namespace

FilterE Semigroup::filter_from_family(const Word& word, const Word& cycle,
                                      std::vector<Element> family) const {
  const std::size_t top = word.size() + cycle.size();
  if (family.size() != top + 1) {
    throw ValidationError("family needs " + std::to_string(top + 1) + " filters, got " +
                              std::to_string(family.size()),
                          std::min(family.size(), top + 1));
  }
  for (const auto& g : family) sys_.algebra().require(g);
  FilterE xi{word, cycle, std::move(family)};
  for (std::size_t i = 0; i < word.size(); ++i) sys_.action(word[i]);
  for (std::size_t i = 0; i < cycle.size(); ++i) sys_.action(cycle[i]);

  if (top == 0 && xi.family[0].empty()) {
    throw ValidationError("F_0 must be a filter when the word is empty", 0);
  }
  Word prefix;
  for (std::size_t n = 1; n <= top; ++n) {
    prefix.push_back(xi.letter(n));
    const Element& g = xi.family[n];
    if (g.empty() || !leq(g, sys_.word_gen(prefix))) {
      throw ValidationError(index_note(n) + " is not a filter in I_" + sys_.format_word(prefix), n);
    }
  }
  // Completeness: F_n = {A : θ_{α_{n+1}}(A) ∈ F_{n+1}}, including the seam.
  const std::size_t last = xi.infinite() ? top : top - 1;
  for (std::size_t n = 0; n <= last && top > 0; ++n) {
    LabelId l = xi.letter(n + 1);
    const Element& next = xi.generator(n + 1);
    Element expect = sys_.has_full_pre(l, next) ? sys_.pre_image(l, next) : sys_.algebra().empty();
    if (xi.family[n] != expect) {
      throw ValidationError("family is not complete at " + index_note(n) + ": expected " +
                                (expect.empty() ? std::string("∅") : "↑" + sys_.format(expect)),
                            n);
    }
  }
  return canonical(std::move(xi));
}

FilterE Semigroup::canonical(FilterE xi) const {
  if (!xi.infinite()) return xi;
  const std::size_t p = xi.word.size();
  std::size_t len = xi.cycle.size();
  // Smallest period of the (letter, generator) sequence over one cycle.
  for (std::size_t q = 1; q < len; ++q) {
    if (len % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = q; i < len && periodic; ++i) {
      periodic = xi.cycle[i] == xi.cycle[i - q] && xi.family[p + 1 + i] == xi.family[p + 1 + i - q];
    }
    if (periodic) {
      xi.cycle = xi.cycle.prefix(q);
      xi.family.resize(p + 1 + q);
      len = q;
      break;
    }
  }
  // Roll the prefix into the cycle while the last prefix step repeats.
  while (!xi.word.empty()) {
    const std::size_t k = xi.word.size();
    if (xi.word.back() != xi.cycle.back() || xi.family[k] != xi.family[k + len]) break;
    Word rotated;
    rotated.push_back(xi.cycle.back());
    rotated += xi.cycle.prefix(len - 1);
    xi.cycle = rotated;
    xi.word.pop_back();
    xi.family.pop_back();
  }
  return xi;
}

bool Semigroup::member(const FilterE& xi, const SgElem& e) const {
  if (e.zero) return false;
  if (!e.is_idempotent()) return false;
  const std::size_t n = e.alpha.size();
  if (!xi.infinite() && n > xi.word.size()) return false;
  for (std::size_t i = 1; i <= n; ++i) {
    if (e.alpha[i - 1] != xi.letter(i)) return false;
  }
  const Element& g = xi.generator(n);
  return !g.empty() && leq(g, e.set) && leq(e.set, sys_.word_gen(e.alpha));
}

FilterE Semigroup::family_from_filter(const FilterE& xi) const {
  const std::size_t top = xi.word.size() + xi.cycle.size();
  FilterE out{xi.word, xi.cycle, {}};
  Word prefix;
  for (std::size_t n = 0; n <= top; ++n) {
    if (n > 0) prefix.push_back(xi.letter(n));
    const Element bound = sys_.word_gen(prefix);
    std::optional<Element> gen;
    for (const Element& a : sys_.algebra().elements_below(bound)) {
      if (a.empty() || !member(xi, SgElem{false, prefix, a, prefix})) continue;
      gen = gen ? (*gen & a) : a;
    }
    out.family.push_back(gen ? *gen : sys_.algebra().empty());
  }
  return out;
}

bool Semigroup::is_tight(const FilterE& xi) const {
  if (xi.infinite()) {
    for (std::size_t n = 1; n < xi.family.size(); ++n) {
      if (xi.family[n].count() != 1) return false;
    }
    return true;
  }
  const Element& top = xi.family.back();
  return top.count() == 1 && sys_.is_singular_atom(top.first_atom());
}

namespace {

// Backward completion of a finite family from its top generator.
std::vector<Element> complete_down(const System& sys, const Word& w, const Element& top) {
  std::vector<Element> fam(w.size() + 1, sys.algebra().empty());
  fam[w.size()] = top;
  for (std::size_t n = w.size(); n > 0; --n) {
    LabelId l = w[n - 1];
    fam[n - 1] = sys.has_full_pre(l, fam[n]) ? sys.pre_image(l, fam[n]) : sys.algebra().empty();
  }
  return fam;
}

}  // namespace

std::vector<FilterE> Semigroup::finite_filters(std::size_t maxlen) const {
  std::vector<FilterE> out;
  for (const Word& w : sys_.wstar(maxlen)) {
    for (const Element& g : sys_.algebra().elements_below(sys_.word_gen(w))) {
      if (g.empty()) continue;
      out.push_back({w, Word{}, complete_down(sys_, w, g)});
    }
  }
  return out;
}

std::vector<FilterE> Semigroup::tight_filters(std::size_t maxlen, std::size_t maxperiod) const {
  std::vector<FilterE> out;
  const Element singular = sys_.singular_atoms();
  for (const Word& w : sys_.wstar(maxlen)) {
    for (AtomId c : (sys_.word_gen(w) & singular).atoms()) {
      out.push_back({w, Word{}, complete_down(sys_, w, sys_.algebra().atom(c))});
    }
  }
  if (maxperiod == 0) return out;

  // Ultrafilter families of infinite type are chains of atoms c_n with
  // c_n ∈ θ_{α_n}(c_{n-1}); enumerate the chains and close them into cycles.
  std::set<FilterE> lassos;
  const BooleanAlgebra& alg = sys_.algebra();
  struct Step {
    LabelId label;
    AtomId atom;
  };
  std::vector<Step> chain;
  const std::size_t maxtotal = maxlen + maxperiod;
  auto record = [&]() {
    const std::size_t total = chain.size();
    for (std::size_t q = 1; q <= std::min(maxperiod, total); ++q) {
      const std::size_t p = total - q;
      if (p > maxlen) continue;
      const Step& head = chain[p];
      if (!sys_.action(head.label).atom_image[chain.back().atom].contains(head.atom)) continue;
      FilterE xi;
      for (std::size_t i = 0; i < p; ++i) xi.word.push_back(chain[i].label);
      for (std::size_t i = p; i < total; ++i) xi.cycle.push_back(chain[i].label);
      auto first_pre = sys_.pre(chain[0].label, chain[0].atom);
      xi.family.push_back(first_pre ? alg.atom(*first_pre) : alg.empty());
      for (const Step& s : chain) xi.family.push_back(alg.atom(s.atom));
      lassos.insert(canonical(std::move(xi)));
    }
  };
  auto extend = [&](auto&& self) -> void {
    record();
    if (chain.size() == maxtotal) return;
    const AtomId from = chain.back().atom;
    for (LabelId l = 0; l < sys_.label_count(); ++l) {
      for (AtomId c : sys_.action(l).atom_image[from].atoms()) {
        chain.push_back({l, c});
        self(self);
        chain.pop_back();
      }
    }
  };
  for (LabelId l = 0; l < sys_.label_count(); ++l) {
    for (AtomId c : sys_.ideal_gen(l).atoms()) {
      chain.push_back({l, c});
      extend(extend);
      chain.pop_back();
    }
  }
  std::vector<FilterE> sorted(lassos.begin(), lassos.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const FilterE& a, const FilterE& b) {
    std::size_t la = a.word.size() + a.cycle.size(), lb = b.word.size() + b.cycle.size();
    return la < lb;
  });
  out.insert(out.end(), sorted.begin(), sorted.end());
  return out;
}

std::string Semigroup::format(const FilterE& xi) const {
  std::string out;
  if (xi.infinite()) {
    out = (xi.word.empty() ? "" : sys_.format_word(xi.word)) + "(" + sys_.format_word(xi.cycle) + ")^∞";
  } else {
    out = sys_.format_word(xi.word);
  }
  out += " |";
  for (std::size_t n = 0; n < xi.family.size(); ++n) {
    out += n == 0 ? " " : ", ";
    out += xi.family[n].empty() ? std::string("∅") : "↑" + sys_.format(xi.family[n]);
  }
  return out;
}

}  // namespace gbds

namespace gbds {

Report Semigroup::check_laws(std::size_t maxlen) const {
  Report rep("inverse semigroup laws (|α|, |β| ≤ " + std::to_string(maxlen) + ")");
  const auto base = enumerate(maxlen);
  const std::size_t m = base.size();
  rep.fact("nonzero elements", std::to_string(m));

  // Products are interned; id 0 is the zero element.
  std::vector<SgElem> pool{SgElem::Zero()};
  std::map<SgElem, int> id{{SgElem::Zero(), 0}};
  auto intern = [&](const SgElem& s) {
    auto [it, fresh] = id.emplace(s, static_cast<int>(pool.size()));
    if (fresh) pool.push_back(s);
    return it->second;
  };
  for (const auto& s : base) intern(s);
  Tally closed("products are 0 or valid triples");
  auto valid = [&](const SgElem& s) {
    if (s.zero) return true;
    return !s.set.empty() && leq(s.set, sys_.word_gen(s.alpha)) && leq(s.set, sys_.word_gen(s.beta));
  };

  // Level one: base × base. Level two: level one × base and base × level one.
  std::vector<int> prod(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      SgElem st = multiply(base[i], base[j]);
      closed.add(valid(st), [&] { return format(base[i]) + "·" + format(base[j]) + " = " + format(st); });
      prod[i * m + j] = intern(st);
    }
  }
  const std::size_t level1 = pool.size();
  std::vector<int> left(level1 * m, -1), right(m * level1, -1);
  auto mul_left = [&](int a, std::size_t u) {  // (pool[a])·base[u]
    int& slot = left[static_cast<std::size_t>(a) * m + u];
    if (slot < 0) slot = intern(multiply(pool[static_cast<std::size_t>(a)], base[u]));
    return slot;
  };
  auto mul_right = [&](std::size_t s, int b) {  // base[s]·(pool[b])
    int& slot = right[s * level1 + static_cast<std::size_t>(b)];
    if (slot < 0) slot = intern(multiply(base[s], pool[static_cast<std::size_t>(b)]));
    return slot;
  };
  // Element ids of base[i] are i + 1.
  Tally assoc("associativity (st)u = s(tu)");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const int st = prod[i * m + j];
      for (std::size_t k = 0; k < m; ++k) {
        const int lhs = mul_left(st, k);
        const int rhs = mul_right(i, prod[j * m + k]);
        if (lhs == rhs) {
          assoc.add(true);
        } else {
          assoc.fail(format(base[i]) + ", " + format(base[j]) + ", " + format(base[k]));
        }
      }
    }
  }
  assoc.emit(rep);
  closed.emit(rep);

  Tally inv("s·s*·s = s and s*·s·s* = s*");
  Tally idem("idempotents commute");
  std::vector<std::size_t> idempotents;
  for (std::size_t i = 0; i < m; ++i) {
    const SgElem& s = base[i];
    const SgElem t = star(s);
    bool ok = multiply(multiply(s, t), s) == s && multiply(multiply(t, s), t) == t;
    inv.add(ok, [&] { return format(s); });
    if (s.is_idempotent()) idempotents.push_back(i);
  }
  for (std::size_t i : idempotents) {
    for (std::size_t j : idempotents) {
      idem.add(prod[i * m + j] == prod[j * m + i], [&] { return format(base[i]) + ", " + format(base[j]); });
    }
  }
  inv.emit(rep);
  idem.emit(rep);
  return rep;
}

}  // namespace gbds
