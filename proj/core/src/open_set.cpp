#include <algorithm>
#include <iterator>
#include <map>

#include "gbds/paths.hpp"

namespace gbds {

bool BoundarySpace::valid_cell(const CellKey& cell, std::size_t depth) const {
  if (cell.atom >= sys_.atom_count() || cell.word.size() > depth) return false;
  for (std::size_t i = 0; i < cell.word.size(); ++i) {
    if (cell.word[i] >= sys_.label_count()) return false;
  }
  if (!cell.word.empty() && !sys_.word_gen(cell.word).contains(cell.atom)) return false;
  if (cell.word.size() < depth) return sys_.is_singular_atom(cell.atom);
  return true;
}

bool BoundarySpace::cell_nonempty(const CellKey& cell, std::size_t depth) const {
  if (!valid_cell(cell, depth)) return false;
  if (cell.word.size() < depth) return true;
  const std::size_t n = sys_.atom_count();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  auto dfs = [&](auto&& self, AtomId a) -> bool {
    if (sys_.is_singular_atom(a)) return true;
    state[a] = 1;
    for (LabelId l = 0; l < sys_.label_count(); ++l) {
      for (AtomId c : sys_.action(l).atom_image[a].atoms()) {
        if (state[c] == 1) return true;
        if (state[c] == 0 && self(self, c)) return true;
      }
    }
    state[a] = 2;
    return false;
  };
  return dfs(dfs, cell.atom);
}

std::vector<CellKey> BoundarySpace::children(const CellKey& cell, std::size_t depth) const {
  if (cell.word.size() < depth) return {cell};
  std::vector<CellKey> out;
  if (sys_.is_singular_atom(cell.atom)) out.push_back(cell);
  for (LabelId l = 0; l < sys_.label_count(); ++l) {
    for (AtomId c : sys_.action(l).atom_image[cell.atom].atoms()) {
      out.push_back({cell.word + Word::single(l), c});
    }
  }
  return out;
}

OpenSet BoundarySpace::make(std::size_t depth, std::vector<CellKey> cells) const {
  for (const auto& c : cells) {
    if (!valid_cell(c, depth)) throw PreconditionError("invalid cell in compact-open set");
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  return {depth, std::move(cells)};
}

OpenSet BoundarySpace::universe(std::size_t depth) const {
  if (depth < min_depth_) depth = min_depth_;
  OpenSet s;
  if (depth == 0) {
    for (AtomId a = 0; a < sys_.atom_count(); ++a) s.cells.push_back({Word{}, a});
    return s;
  }
  s.depth = 1;
  for (const auto& e : corr_.edges) s.cells.push_back({Word::single(e.edge.label), e.edge.atom});
  for (AtomId v : singular_vertices()) s.cells.push_back({Word{}, v});
  std::sort(s.cells.begin(), s.cells.end());
  return refine(s, depth);
}

OpenSet BoundarySpace::cylinder(const Word& alpha, const Element& a) const {
  sys_.algebra().require(a);
  if (!alpha.empty() && !leq(a, sys_.word_gen(alpha))) {
    throw PreconditionError("𝒩(α, A) needs A ∈ I_α");
  }
  OpenSet s;
  s.depth = alpha.size();
  for (AtomId c : a.atoms()) s.cells.push_back({alpha, c});
  return s;
}

OpenSet BoundarySpace::refine(const OpenSet& s, std::size_t depth) const {
  if (depth < s.depth) throw PreconditionError("cannot refine to a smaller depth");
  OpenSet cur = s;
  while (cur.depth < depth) {
    OpenSet next;
    next.depth = cur.depth + 1;
    for (const auto& c : cur.cells) {
      auto ch = children(c, cur.depth);
      next.cells.insert(next.cells.end(), ch.begin(), ch.end());
    }
    std::sort(next.cells.begin(), next.cells.end());
    cur = std::move(next);
  }
  return cur;
}

namespace {

template <typename Op>
OpenSet combine(const BoundarySpace& sp, const OpenSet& a, const OpenSet& b, Op op) {
  const std::size_t d = std::max(a.depth, b.depth);
  OpenSet ra = sp.refine(a, d), rb = sp.refine(b, d);
  OpenSet out;
  out.depth = d;
  op(ra.cells.begin(), ra.cells.end(), rb.cells.begin(), rb.cells.end(), std::back_inserter(out.cells));
  return out;
}

}  // namespace

OpenSet BoundarySpace::unite(const OpenSet& a, const OpenSet& b) const {
  return combine(*this, a, b, [](auto... args) { return std::set_union(args...); });
}

OpenSet BoundarySpace::intersect(const OpenSet& a, const OpenSet& b) const {
  return combine(*this, a, b, [](auto... args) { return std::set_intersection(args...); });
}

OpenSet BoundarySpace::subtract(const OpenSet& a, const OpenSet& b) const {
  return combine(*this, a, b, [](auto... args) { return std::set_difference(args...); });
}

OpenSet BoundarySpace::complement(const OpenSet& a) const {
  return subtract(universe(a.depth), a);
}

bool BoundarySpace::equal(const OpenSet& a, const OpenSet& b) const {
  const std::size_t d = std::max(a.depth, b.depth);
  return refine(a, d).cells == refine(b, d).cells;
}

bool BoundarySpace::subset(const OpenSet& a, const OpenSet& b) const {
  return subtract(a, b).cells.empty();
}

CellKey BoundarySpace::cell_of(const BoundaryPath& mu, std::size_t depth, bool& ok) const {
  ok = true;
  if (depth == 0) {
    auto rv = range_of_path(mu);
    if (!rv) {
      ok = false;
      return {};
    }
    return {Word{}, *rv};
  }
  if (!mu.infinite() && mu.length() < depth) return {mu.word(mu.length()), mu.terminal()};
  return {mu.word(depth), mu.edge(depth).atom};
}

bool BoundarySpace::contains(const OpenSet& s, const BoundaryPath& mu) const {
  bool ok = false;
  CellKey key = cell_of(mu, s.depth, ok);
  return ok && std::binary_search(s.cells.begin(), s.cells.end(), key);
}

OpenSet BoundarySpace::cylinder_intersect(const Word& alpha, const Element& a, const Word& beta,
                                          const Element& b) const {
  if (alpha == beta) return cylinder(alpha, a & b);
  if (beta.starts_with(alpha)) {
    return cylinder(beta, sys_.apply_word(beta.sub(alpha.size()), a) & b);
  }
  if (alpha.starts_with(beta)) {
    return cylinder(alpha, a & sys_.apply_word(alpha.sub(beta.size()), b));
  }
  return {std::max(alpha.size(), beta.size()), {}};
}

std::string BoundarySpace::format(const OpenSet& s) const {
  if (s.cells.empty()) return "∅";
  std::vector<std::string> terms;
  std::map<Word, std::vector<AtomId>> cyl;
  std::vector<Word> order;
  for (const auto& c : s.cells) {
    if (c.word.size() == s.depth) {
      if (!cyl.count(c.word)) order.push_back(c.word);
      cyl[c.word].push_back(c.atom);
      continue;
    }
    if (c.word.empty()) {
      terms.push_back("{v:" + sys_.algebra().atom_name(c.atom) + "}");
      continue;
    }
    std::vector<Edge> edges(c.word.size());
    AtomId cur = c.atom;
    for (std::size_t i = c.word.size(); i > 0; --i) {
      edges[i - 1] = {c.word[i - 1], cur};
      if (i > 1) cur = *sys_.pre(c.word[i - 1], cur);
    }
    terms.push_back("{" + format(BoundaryPath::finite(std::move(edges))) + "}");
  }
  std::vector<std::string> out;
  for (const Word& w : order) {
    out.push_back("N(" + sys_.format_word(w) + "," + sys_.format(sys_.algebra().from_atoms(cyl[w])) + ")");
  }
  out.insert(out.end(), terms.begin(), terms.end());
  std::string joined;
  for (std::size_t i = 0; i < out.size(); ++i) joined += (i ? " ∪ " : "") + out[i];
  return joined;
}

}  // namespace gbds
