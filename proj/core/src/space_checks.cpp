#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "gbds/paths.hpp"

namespace gbds {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view text, std::string_view sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(text.substr(start)));
      return out;
    }
    out.push_back(trim(text.substr(start, pos - start)));
    start = pos + sep.size();
  }
}

}  // namespace

OpenSet BoundarySpace::parse_openset(std::string_view text) const {
  OpenSet acc = empty_set();
  for (const std::string& term : split(text, "∪")) {
    if (term.empty()) throw StructuralError("empty term in open set '" + std::string(text) + "'");
    if (term == "∅" || term == "empty") continue;
    if (term == "∂E" || term == "all") {
      acc = unite(acc, universe());
      continue;
    }
    if (term.rfind("N(", 0) == 0) {
      if (term.back() != ')') throw StructuralError("cylinder '" + term + "' must end with ')'");
      const std::string body = term.substr(2, term.size() - 3);
      const std::size_t comma = body.find(',');
      if (comma == std::string::npos) throw StructuralError("cylinder '" + term + "' needs N(word,{atoms})");
      const Word w = sys_.parse_word(trim(std::string_view(body).substr(0, comma)));
      const std::string set = trim(std::string_view(body).substr(comma + 1));
      Element a = sys_.algebra().empty();
      if (set != "∅") {
        if (set.size() < 2 || set.front() != '{' || set.back() != '}') {
          throw StructuralError("atom set '" + set + "' must look like {x,y}");
        }
        const std::string inner = set.substr(1, set.size() - 2);
        if (!trim(inner).empty()) {
          for (const std::string& name : split(inner, ",")) a = a | sys_.algebra().atom(sys_.algebra().atom_id(name));
        }
      }
      acc = unite(acc, cylinder(w, a));
      continue;
    }
    if (term.front() == '{' && term.back() == '}') {
      const BoundaryPath mu = parse_path(std::string_view(term).substr(1, term.size() - 2));
      if (mu.infinite() || !sys_.is_singular_atom(mu.terminal())) {
        throw PreconditionError("{" + format(mu) + "} is not open: the path must end at a singular vertex");
      }
      const Word w = mu.word(mu.length());
      acc = unite(acc, make(w.size() + 1, {CellKey{w, mu.terminal()}}));
      continue;
    }
    throw StructuralError("cannot parse open-set term '" + term + "'");
  }
  return acc;
}

Report BoundarySpace::check_tight(std::size_t maxlen, std::size_t maxperiod) const {
  Report rep("tight filters and boundary paths (|α| ≤ " + std::to_string(maxlen) + ", period ≤ " +
             std::to_string(maxperiod) + ")");
  const auto filters = sg_.finite_filters(maxlen);
  const auto tight = sg_.tight_filters(maxlen, maxperiod);
  const std::vector<BoundaryPath> finite = finite_paths(maxlen);
  std::vector<BoundaryPath> loops;
  for (auto& mu : lassos(maxlen + maxperiod, maxperiod)) {
    if (mu.stem().size() <= maxlen && mu.cycle().size() <= maxperiod) loops.push_back(std::move(mu));
  }
  rep.fact("filters of finite type", std::to_string(filters.size()));
  rep.fact("tight filters", std::to_string(tight.size()));
  rep.fact("finite boundary paths", std::to_string(finite.size()));
  rep.fact("lassos", std::to_string(loops.size()));

  Tally round("family ↔ filter round trip");
  auto round_trip = [&](const FilterE& xi) {
    bool ok = false;
    try {
      ok = sg_.family_from_filter(xi) == xi && sg_.filter_from_family(xi.word, xi.cycle, xi.family) == xi;
    } catch (const Error&) {
    }
    round.add(ok, [&] { return sg_.format(xi); });
  };
  for (const auto& xi : filters) round_trip(xi);
  for (const auto& xi : tight) {
    if (xi.infinite()) round_trip(xi);
  }
  round.emit(rep);

  std::set<FilterE> from_paths;
  Tally to_tight("boundary path ↦ tight filter ↦ same path");
  const std::vector<BoundaryPath>* pools[] = {&finite, &loops};
  for (const auto* pool : pools) {
    for (const auto& mu : *pool) {
      bool ok = false;
      try {
        FilterE xi = boundary_to_tight(mu);
        ok = sg_.is_tight(xi) && tight_to_boundary(xi) == mu;
        from_paths.insert(std::move(xi));
      } catch (const Error&) {
      }
      to_tight.add(ok, [&] { return format(mu); });
    }
  }
  to_tight.emit(rep);

  Tally agree("is_tight ⇔ image of a finite boundary path");
  for (const auto& xi : filters) {
    agree.add(sg_.is_tight(xi) == (from_paths.count(xi) == 1), [&] { return sg_.format(xi); });
  }
  agree.emit(rep);

  Tally back("tight filter ↦ boundary path ↦ same filter");
  std::set<FilterE> tight_set;
  for (const auto& xi : tight) {
    bool ok = false;
    try {
      const BoundaryPath mu = tight_to_boundary(xi);
      ok = sg_.is_tight(xi) && is_boundary_path(mu) && boundary_to_tight(mu) == xi;
    } catch (const Error&) {
    }
    back.add(ok, [&] { return sg_.format(xi); });
    tight_set.insert(xi);
  }
  back.emit(rep);
  rep.check("tight filters are exactly the images of boundary paths", tight_set == from_paths,
            std::to_string(tight_set.size()) + " filters vs " + std::to_string(from_paths.size()) + " paths");
  return rep;
}

Report BoundarySpace::check_cylinders(std::size_t depth, std::size_t cyl_len, std::size_t max_pairs,
                                      std::uint64_t seed) const {
  Report rep("cylinder calculus (paths of depth ≤ " + std::to_string(depth) + ", |α| ≤ " +
             std::to_string(cyl_len) + ")");
  const auto pool = paths(depth);
  struct Cyl {
    Word alpha;
    Element a;
    OpenSet set;
    std::vector<bool> in;
  };
  std::vector<Cyl> cyls;
  for (const Word& w : sys_.wstar(cyl_len)) {
    for (const Element& a : sys_.algebra().elements_below(sys_.word_gen(w))) {
      if (a.empty()) continue;
      Cyl c{w, a, cylinder(w, a), {}};
      for (const auto& mu : pool) c.in.push_back(cylinder_member(mu, w, a));
      cyls.push_back(std::move(c));
    }
  }
  rep.fact("paths", std::to_string(pool.size()));
  rep.fact("cylinders", std::to_string(cyls.size()));
  auto name = [&](const Cyl& c) { return "N(" + sys_.format_word(c.alpha) + "," + sys_.format(c.a) + ")"; };

  Tally member("membership agrees with the path definition");
  Tally comp("complement pointwise");
  const OpenSet all = universe();
  Tally whole("∂E contains every path");
  for (const auto& mu : pool) whole.add(contains(all, mu), [&] { return format(mu); });
  for (const auto& c : cyls) {
    const OpenSet co = complement(c.set);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      member.add(contains(c.set, pool[i]) == c.in[i], [&] { return name(c) + " at " + format(pool[i]); });
      comp.add(contains(co, pool[i]) == !c.in[i], [&] { return name(c) + " at " + format(pool[i]); });
    }
  }
  whole.emit(rep);
  member.emit(rep);
  comp.emit(rep);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t m = cyls.size();
  if (m * m <= max_pairs) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) pairs.emplace_back(i, j);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t k = 0; k < max_pairs; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }
  rep.fact("pairs", std::to_string(pairs.size()));
  Tally closed("𝒩(α,A) ∩ 𝒩(β,B) closed form equals the cellwise intersection");
  Tally ops("∩, ∪, \\ pointwise");
  Tally sub("⊆ implies pointwise inclusion");
  for (const auto& [i, j] : pairs) {
    const Cyl& x = cyls[i];
    const Cyl& y = cyls[j];
    const OpenSet meet_set = intersect(x.set, y.set);
    closed.add(equal(cylinder_intersect(x.alpha, x.a, y.alpha, y.a), meet_set),
               [&] { return name(x) + ", " + name(y); });
    const OpenSet join_set = unite(x.set, y.set), diff = subtract(x.set, y.set);
    const bool included = subset(x.set, y.set);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const bool a = x.in[k], b = y.in[k];
      bool ok = contains(meet_set, pool[k]) == (a && b) && contains(join_set, pool[k]) == (a || b) &&
                contains(diff, pool[k]) == (a && !b);
      ops.add(ok, [&] { return name(x) + ", " + name(y) + " at " + format(pool[k]); });
      if (included) sub.add(!a || b, [&] { return name(x) + " ⊆ " + name(y) + " at " + format(pool[k]); });
    }
  }
  closed.emit(rep);
  ops.emit(rep);
  sub.emit(rep);
  return rep;
}

}  // namespace gbds
