#include "gbds/paths.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace gbds {

// BoundaryPath ---------------------------------------------------------------

BoundaryPath BoundaryPath::vertex(AtomId v) {
  BoundaryPath p;
  p.kind_ = Kind::Vertex;
  p.vertex_ = v;
  return p;
}

BoundaryPath BoundaryPath::finite(std::vector<Edge> edges) {
  if (edges.empty()) throw StructuralError("a finite path needs at least one edge");
  BoundaryPath p;
  p.kind_ = Kind::Finite;
  p.stem_ = std::move(edges);
  return p;
}

BoundaryPath BoundaryPath::lasso(std::vector<Edge> prefix, std::vector<Edge> cycle) {
  if (cycle.empty()) throw StructuralError("a lasso needs a nonempty cycle");
  const std::size_t len = cycle.size();
  for (std::size_t q = 1; q < len; ++q) {
    if (len % q != 0) continue;
    bool periodic = true;
    for (std::size_t i = q; i < len && periodic; ++i) periodic = cycle[i] == cycle[i - q];
    if (periodic) {
      cycle.resize(q);
      break;
    }
  }
  while (!prefix.empty() && prefix.back() == cycle.back()) {
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
    prefix.pop_back();
  }
  BoundaryPath p;
  p.kind_ = Kind::Lasso;
  p.stem_ = std::move(prefix);
  p.cycle_ = std::move(cycle);
  return p;
}

std::size_t BoundaryPath::length() const noexcept {
  switch (kind_) {
    case Kind::Vertex:
      return 0;
    case Kind::Finite:
      return stem_.size();
    case Kind::Lasso:
      break;
  }
  return std::numeric_limits<std::size_t>::max();
}

AtomId BoundaryPath::vertex_atom() const {
  if (kind_ != Kind::Vertex) throw PreconditionError("not a vertex path");
  return vertex_;
}

const Edge& BoundaryPath::edge(std::size_t i) const {
  if (!has_edge(i)) throw PreconditionError("edge index out of range");
  if (i <= stem_.size()) return stem_[i - 1];
  return cycle_[(i - stem_.size() - 1) % cycle_.size()];
}

Word BoundaryPath::word(std::size_t n) const {
  Word w;
  for (std::size_t i = 1; i <= n; ++i) w.push_back(edge(i).label);
  return w;
}

AtomId BoundaryPath::terminal() const {
  switch (kind_) {
    case Kind::Vertex:
      return vertex_;
    case Kind::Finite:
      return stem_.back().atom;
    case Kind::Lasso:
      break;
  }
  throw PreconditionError("a lasso has no terminal vertex");
}

BoundaryPath BoundaryPath::drop(std::size_t k) const {
  if (k == 0) return *this;
  if (kind_ == Kind::Vertex) throw PreconditionError("cannot remove edges from a vertex path");
  if (kind_ == Kind::Finite) {
    if (k > stem_.size()) throw PreconditionError("cannot remove more edges than the path has");
    if (k == stem_.size()) return vertex(stem_.back().atom);
    return finite(std::vector<Edge>(stem_.begin() + static_cast<std::ptrdiff_t>(k), stem_.end()));
  }
  if (k <= stem_.size()) {
    return lasso(std::vector<Edge>(stem_.begin() + static_cast<std::ptrdiff_t>(k), stem_.end()), cycle_);
  }
  std::vector<Edge> cyc = cycle_;
  std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>((k - stem_.size()) % cyc.size()),
              cyc.end());
  return lasso({}, std::move(cyc));
}

BoundaryPath BoundaryPath::prepend(const std::vector<Edge>& edges) const {
  if (edges.empty()) return *this;
  std::vector<Edge> head = edges;
  switch (kind_) {
    case Kind::Vertex:
      return finite(std::move(head));
    case Kind::Finite:
      head.insert(head.end(), stem_.begin(), stem_.end());
      return finite(std::move(head));
    case Kind::Lasso:
      break;
  }
  head.insert(head.end(), stem_.begin(), stem_.end());
  return lasso(std::move(head), cycle_);
}

bool path_display_less(const BoundaryPath& a, const BoundaryPath& b) {
  auto rank = [](const BoundaryPath& p) {
    std::size_t size = p.is_lasso() ? p.stem().size() + p.cycle().size() : p.length();
    return std::make_pair(p.is_lasso() ? 1 : 0, size);
  };
  auto ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

// BoundarySpace: correspondence ------------------------------------------------

BoundarySpace::BoundarySpace(System sys) : sys_(std::move(sys)), sg_(sys_) {
  sys_.require_valid();
  for (AtomId a = 0; a < sys_.atom_count(); ++a) corr_.vertices.push_back(a);
  for (LabelId l = 0; l < sys_.label_count(); ++l) {
    for (AtomId c : sys_.ideal_gen(l).atoms()) {
      Edge e{l, c};
      corr_.edges.push_back({e, d(e), r(e)});
    }
  }
  min_depth_ = sys_.has_empty_range_edges() ? 1 : 0;
}

bool BoundarySpace::is_edge(const Edge& e) const {
  return e.label < sys_.label_count() && e.atom < sys_.atom_count() &&
         sys_.ideal_gen(e.label).contains(e.atom);
}

AtomId BoundarySpace::d(const Edge& e) const {
  if (!is_edge(e)) throw PreconditionError("not an edge of the correspondence");
  return upclose_h(Word::single(e.label), Word{}, e.atom);
}

std::optional<AtomId> BoundarySpace::r(const Edge& e) const {
  if (!is_edge(e)) throw PreconditionError("not an edge of the correspondence");
  return dual_f(Word{}, Word::single(e.label), e.atom);
}

std::vector<AtomId> BoundarySpace::singular_vertices() const {
  // Finite discrete E⁰: F⁰_fin = F⁰, closures are trivial, so E⁰_sg is the
  // set of vertices that are not the range of any edge.
  std::vector<bool> hit(sys_.atom_count(), false);
  for (const auto& e : corr_.edges) {
    if (e.r) hit[*e.r] = true;
  }
  std::vector<AtomId> out;
  for (AtomId v : corr_.vertices) {
    if (!hit[v]) out.push_back(v);
  }
  return out;
}

std::optional<AtomId> BoundarySpace::dual_f(const Word& alpha, const Word& beta, AtomId eta) const {
  if (!sys_.word_gen(alpha + beta).contains(eta)) {
    throw PreconditionError("dual_f needs an ultrafilter of I_{αβ}");
  }
  AtomId cur = eta;
  for (std::size_t i = beta.size(); i > 0; --i) {
    auto p = sys_.pre(beta[i - 1], cur);
    if (!p) {
      if (!alpha.empty() || i > 1) throw Error("internal: broken preimage chain");
      return std::nullopt;
    }
    cur = *p;
  }
  return cur;
}

AtomId BoundarySpace::restrict_g(const Word& alpha, const Word& beta, AtomId f) const {
  if (!sys_.word_gen(beta).contains(f)) {
    throw PreconditionError("restrict_g needs an ultrafilter of I_β");
  }
  if (!sys_.word_gen(alpha + beta).contains(f)) {
    throw PreconditionError("restrict_g: 𝓕 ∩ I_{αβ} is empty");
  }
  return f;
}

AtomId BoundarySpace::upclose_h(const Word& alpha, const Word& beta, AtomId f) const {
  if (!sys_.word_gen(alpha + beta).contains(f)) {
    throw PreconditionError("upclose_h needs an ultrafilter of I_{αβ}");
  }
  return f;
}

// BoundarySpace: paths ---------------------------------------------------------

namespace {

bool fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return false;
}

}  // namespace

bool BoundarySpace::is_boundary_path(const BoundaryPath& mu, std::string* why) const {
  if (mu.is_vertex()) {
    AtomId v = mu.vertex_atom();
    if (v >= sys_.atom_count()) return fail(why, "unknown vertex");
    if (!sys_.is_singular_atom(v)) return fail(why, "vertex " + format_vertex(v) + " is not singular");
    return true;
  }
  std::vector<Edge> all = mu.stem();
  all.insert(all.end(), mu.cycle().begin(), mu.cycle().end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!is_edge(all[i])) return fail(why, "edge " + std::to_string(i + 1) + " is not an edge");
    if (i > 0 && sys_.pre(all[i].label, all[i].atom) != all[i - 1].atom) {
      return fail(why, "d(e_" + std::to_string(i) + ") ≠ r(e_" + std::to_string(i + 1) + ")");
    }
  }
  if (mu.is_lasso()) {
    const Edge& head = mu.cycle().front();
    if (sys_.pre(head.label, head.atom) != mu.cycle().back().atom) {
      return fail(why, "the cycle does not close");
    }
    return true;
  }
  if (!sys_.is_singular_atom(all.back().atom)) {
    return fail(why, "a finite boundary path must end at a singular vertex");
  }
  return true;
}

void BoundarySpace::require_path(const BoundaryPath& mu) const {
  std::string why;
  if (!is_boundary_path(mu, &why)) throw PreconditionError("not a boundary path: " + why);
}

std::optional<AtomId> BoundarySpace::range_of_path(const BoundaryPath& mu) const {
  if (mu.is_vertex()) return mu.vertex_atom();
  return r(mu.edge(1));
}

BoundaryPath BoundarySpace::shift(const BoundaryPath& mu) const {
  if (mu.is_vertex()) throw PreconditionError("shift is undefined on vertex paths");
  return mu.drop(1);
}

bool BoundarySpace::cylinder_member(const BoundaryPath& mu, const Word& alpha,
                                    const Element& a) const {
  sys_.algebra().require(a);
  if (alpha.empty()) {
    auto rv = range_of_path(mu);
    return rv && a.contains(*rv);
  }
  const std::size_t n = alpha.size();
  if (!mu.has_edge(n) || mu.word(n) != alpha) return false;
  const Edge& e = mu.edge(n);
  return a.contains(e.atom) && leq(a, sys_.ideal_gen(e.label));
}

std::vector<BoundaryPath> BoundarySpace::finite_paths(std::size_t maxlen) const {
  std::vector<BoundaryPath> out;
  for (AtomId v : singular_vertices()) out.push_back(BoundaryPath::vertex(v));
  std::vector<Edge> chain;
  auto extend = [&](auto&& self) -> void {
    AtomId at = chain.back().atom;
    if (sys_.is_singular_atom(at)) {
      out.push_back(BoundaryPath::finite(chain));
      return;
    }
    if (chain.size() == maxlen) return;
    for (LabelId l = 0; l < sys_.label_count(); ++l) {
      for (AtomId c : sys_.action(l).atom_image[at].atoms()) {
        chain.push_back({l, c});
        self(self);
        chain.pop_back();
      }
    }
  };
  if (maxlen > 0) {
    for (const auto& e : corr_.edges) {
      chain.push_back(e.edge);
      extend(extend);
      chain.pop_back();
    }
  }
  std::sort(out.begin(), out.end(), path_display_less);
  return out;
}

std::vector<BoundaryPath> BoundarySpace::lassos(std::size_t maxtotal, std::size_t maxperiod) const {
  std::set<BoundaryPath> found;
  std::vector<Edge> chain;
  auto record = [&]() {
    const std::size_t total = chain.size();
    for (std::size_t q = 1; q <= std::min(maxperiod, total); ++q) {
      const Edge& head = chain[total - q];
      if (sys_.pre(head.label, head.atom) != chain.back().atom) continue;
      found.insert(BoundaryPath::lasso(
          std::vector<Edge>(chain.begin(), chain.end() - static_cast<std::ptrdiff_t>(q)),
          std::vector<Edge>(chain.end() - static_cast<std::ptrdiff_t>(q), chain.end())));
    }
  };
  auto extend = [&](auto&& self) -> void {
    record();
    if (chain.size() == maxtotal) return;
    AtomId at = chain.back().atom;
    for (LabelId l = 0; l < sys_.label_count(); ++l) {
      for (AtomId c : sys_.action(l).atom_image[at].atoms()) {
        chain.push_back({l, c});
        self(self);
        chain.pop_back();
      }
    }
  };
  if (maxtotal > 0) {
    for (const auto& e : corr_.edges) {
      chain.push_back(e.edge);
      extend(extend);
      chain.pop_back();
    }
  }
  std::vector<BoundaryPath> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), path_display_less);
  return out;
}

std::vector<BoundaryPath> BoundarySpace::paths(std::size_t depth) const {
  auto out = finite_paths(depth);
  auto ls = lassos(depth, depth);
  out.insert(out.end(), ls.begin(), ls.end());
  return out;
}

bool BoundarySpace::boundary_is_finite() const {
  const std::size_t n = sys_.atom_count();
  std::vector<std::vector<AtomId>> succ(n);
  std::vector<std::size_t> outdeg(n, 0);
  for (AtomId a = 0; a < n; ++a) {
    for (LabelId l = 0; l < sys_.label_count(); ++l) {
      for (AtomId c : sys_.action(l).atom_image[a].atoms()) {
        succ[a].push_back(c);
        ++outdeg[a];
      }
    }
  }
  for (AtomId a = 0; a < n; ++a) {
    // Is a on a cycle?
    std::vector<bool> seen(n, false);
    std::vector<AtomId> stack(succ[a].begin(), succ[a].end());
    bool on_cycle = false;
    while (!stack.empty() && !on_cycle) {
      AtomId x = stack.back();
      stack.pop_back();
      if (x == a) on_cycle = true;
      if (seen[x]) continue;
      seen[x] = true;
      for (AtomId y : succ[x]) stack.push_back(y);
    }
    if (on_cycle && outdeg[a] != 1) return false;
  }
  return true;
}

std::vector<BoundaryPath> BoundarySpace::exact_boundary() const {
  if (!boundary_is_finite()) {
    throw UnsupportedInstance(
        "the boundary path space is infinite: a vertex on a cycle has more than one outgoing edge");
  }
  std::set<BoundaryPath> found;
  for (AtomId v : singular_vertices()) found.insert(BoundaryPath::vertex(v));
  std::vector<Edge> chain;
  auto extend = [&](auto&& self) -> void {
    const std::size_t m = chain.size() - 1;
    const AtomId at = chain[m].atom;
    for (std::size_t j = 0; j < m; ++j) {
      if (chain[j].atom == at) {
        found.insert(BoundaryPath::lasso(
            std::vector<Edge>(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(j + 1)),
            std::vector<Edge>(chain.begin() + static_cast<std::ptrdiff_t>(j + 1), chain.end())));
        return;
      }
    }
    if (sys_.is_singular_atom(at)) {
      found.insert(BoundaryPath::finite(chain));
      return;
    }
    for (LabelId l = 0; l < sys_.label_count(); ++l) {
      for (AtomId c : sys_.action(l).atom_image[at].atoms()) {
        chain.push_back({l, c});
        self(self);
        chain.pop_back();
      }
    }
  };
  for (const auto& e : corr_.edges) {
    chain.push_back(e.edge);
    extend(extend);
    chain.pop_back();
  }
  std::vector<BoundaryPath> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), path_display_less);
  return out;
}

FilterE BoundarySpace::boundary_to_tight(const BoundaryPath& mu) const {
  require_path(mu);
  const BooleanAlgebra& alg = sys_.algebra();
  if (mu.is_vertex()) return sg_.filter_from_family(Word{}, {alg.atom(mu.vertex_atom())});
  Word word, cycle;
  std::vector<Element> fam;
  auto r0 = range_of_path(mu);
  fam.push_back(r0 ? alg.atom(*r0) : alg.empty());
  for (const Edge& e : mu.stem()) {
    word.push_back(e.label);
    fam.push_back(alg.atom(e.atom));
  }
  for (const Edge& e : mu.cycle()) {
    cycle.push_back(e.label);
    fam.push_back(alg.atom(e.atom));
  }
  return sg_.filter_from_family(word, cycle, std::move(fam));
}

BoundaryPath BoundarySpace::tight_to_boundary(const FilterE& xi) const {
  if (!sg_.is_tight(xi)) throw PreconditionError("filter is not tight");
  if (!xi.infinite() && xi.word.empty()) return BoundaryPath::vertex(xi.family[0].first_atom());
  std::vector<Edge> stem, cycle;
  for (std::size_t n = 1; n <= xi.word.size(); ++n) {
    stem.push_back({xi.word[n - 1], xi.family[n].first_atom()});
  }
  if (!xi.infinite()) return BoundaryPath::finite(std::move(stem));
  for (std::size_t i = 0; i < xi.cycle.size(); ++i) {
    cycle.push_back({xi.cycle[i], xi.family[xi.word.size() + 1 + i].first_atom()});
  }
  return BoundaryPath::lasso(std::move(stem), std::move(cycle));
}

// Formatting -------------------------------------------------------------------

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

std::string BoundarySpace::format_vertex(AtomId v) const { return "↑" + sys_.algebra().atom_name(v); }

std::string BoundarySpace::format(const BoundaryPath& mu) const {
  auto edges = [&](const std::vector<Edge>& es) {
    std::string out;
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (i) out += '|';
      out += "e:" + sys_.label_name(es[i].label) + "@" + sys_.algebra().atom_name(es[i].atom);
    }
    return out;
  };
  switch (mu.kind()) {
    case BoundaryPath::Kind::Vertex:
      return "v:" + sys_.algebra().atom_name(mu.vertex_atom());
    case BoundaryPath::Kind::Finite:
      return edges(mu.stem());
    case BoundaryPath::Kind::Lasso:
      break;
  }
  return "lasso(" + edges(mu.stem()) + ";" + edges(mu.cycle()) + ")";
}

BoundaryPath BoundarySpace::parse_path(std::string_view spec_in) const {
  const std::string spec = trim(spec_in);
  auto parse_edges = [&](std::string_view text) {
    std::vector<Edge> out;
    std::string t = trim(text);
    if (t.empty()) return out;
    std::size_t start = 0;
    while (start <= t.size()) {
      std::size_t bar = t.find('|', start);
      if (bar == std::string::npos) bar = t.size();
      std::string item = trim(std::string_view(t).substr(start, bar - start));
      if (item.rfind("e:", 0) != 0) throw StructuralError("edge '" + item + "' must look like e:LABEL@ATOM");
      std::size_t at = item.find('@', 2);
      if (at == std::string::npos) throw StructuralError("edge '" + item + "' is missing '@'");
      out.push_back({sys_.label_id(item.substr(2, at - 2)), sys_.algebra().atom_id(item.substr(at + 1))});
      start = bar + 1;
    }
    return out;
  };
  BoundaryPath mu;
  if (spec.rfind("v:", 0) == 0) {
    mu = BoundaryPath::vertex(sys_.algebra().atom_id(trim(std::string_view(spec).substr(2))));
  } else if (spec.rfind("lasso(", 0) == 0) {
    if (spec.back() != ')') throw StructuralError("lasso spec must end with ')'");
    std::string body = spec.substr(6, spec.size() - 7);
    std::size_t semi = body.find(';');
    if (semi == std::string::npos) throw StructuralError("lasso spec needs 'prefix;cycle'");
    mu = BoundaryPath::lasso(parse_edges(std::string_view(body).substr(0, semi)),
                             parse_edges(std::string_view(body).substr(semi + 1)));
  } else {
    mu = BoundaryPath::finite(parse_edges(spec));
  }
  require_path(mu);
  return mu;
}

}  // namespace gbds
