#include "gbds/groupoid.hpp"

#include <map>
#include <random>
#include <set>

namespace gbds {

namespace {

bool shift_equal(const BoundaryPath& x, std::size_t k, const BoundaryPath& y, std::size_t l) {
  if (k > x.length() || l > y.length()) return false;
  return x.drop(k) == y.drop(l);
}

}  // namespace

Groupoids::Groupoids(PartialAction action) : action_(std::move(action)) {}

GElem Groupoids::g_make(const FreeGroupElem& t, const BoundaryPath& source) const {
  return {action_.act(t, source), t, source};
}

RDElem Groupoids::rd_make(const BoundaryPath& target, std::size_t k, std::size_t l,
                          const BoundaryPath& source) const {
  if (!shift_equal(target, k, source, l)) {
    throw PreconditionError("σ^k(μ) ≠ σ^l(ν) for the given witnesses");
  }
  return {target, static_cast<long>(k) - static_cast<long>(l), source, k, l};
}

GElem Groupoids::g_compose(const GElem& a, const GElem& b) const {
  if (!(a.source == b.target)) throw PreconditionError("groupoid elements are not composable");
  return {a.target, a.t * b.t, b.source};
}

GElem Groupoids::g_inverse(const GElem& g) const { return {g.source, g.t.inverse(), g.target}; }

RDElem Groupoids::rd_compose(const RDElem& a, const RDElem& b) const {
  if (!(a.source == b.target)) throw PreconditionError("groupoid elements are not composable");
  const std::size_t j = std::max(a.l, b.k);
  std::size_t k = a.k + j - a.l;
  std::size_t l = b.l + j - b.k;
  while (k > 0 && l > 0 && shift_equal(a.target, k - 1, b.source, l - 1)) {
    --k;
    --l;
  }
  return rd_make(a.target, k, l, b.source);
}

RDElem Groupoids::rd_inverse(const RDElem& r) const { return {r.source, -r.n, r.target, r.l, r.k}; }

RDElem Groupoids::theta(const GElem& g) const {
  if (g.t.is_identity()) return {g.target, 0, g.source, 0, 0};
  auto sh = g.t.shape();
  if (!sh) throw PreconditionError("Θ needs t of shape αβ⁻¹");
  return rd_make(g.target, sh->first.size(), sh->second.size(), g.source);
}

GElem Groupoids::theta_inverse(const RDElem& r) const {
  std::size_t k = r.k, l = r.l;
  while (k > 0 && l > 0 && shift_equal(r.target, k - 1, r.source, l - 1)) {
    --k;
    --l;
  }
  return g_make(FreeGroupElem::of(r.target.word(k), r.source.word(l)), r.source);
}

std::vector<GElem> Groupoids::g_pool(const std::vector<BoundaryPath>& paths, std::size_t depth) const {
  std::set<BoundaryPath> in_pool(paths.begin(), paths.end());
  std::vector<GElem> out;
  const auto ts = FreeGroupElem::shaped(action_.system(), depth);
  for (const auto& t : ts) {
    const OpenSet dom = action_.domain_of(t.inverse());
    for (const auto& nu : paths) {
      if (!space().contains(dom, nu)) continue;
      BoundaryPath mu = action_.act(t, nu);
      if (in_pool.count(mu)) out.push_back({mu, t, nu});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RDElem> Groupoids::rd_pool(const std::vector<BoundaryPath>& paths, std::size_t depth) const {
  std::set<RDElem> found;
  for (const auto& mu : paths) {
    for (const auto& nu : paths) {
      for (std::size_t k = 0; k <= depth; ++k) {
        for (std::size_t l = 0; k + l <= depth; ++l) {
          if (!shift_equal(mu, k, nu, l)) continue;
          RDElem r{mu, static_cast<long>(k) - static_cast<long>(l), nu, k, l};
          auto it = found.find(r);
          if (it == found.end() || it->k + it->l > k + l) {
            if (it != found.end()) found.erase(it);
            found.insert(r);
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::string Groupoids::format(const GElem& g) const {
  const BoundarySpace& sp = space();
  return "(" + sp.format(g.target) + ", " + g.t.format(action_.system()) + ", " + sp.format(g.source) + ")";
}

std::string Groupoids::format(const RDElem& r) const {
  const BoundarySpace& sp = space();
  return "(" + sp.format(r.target) + ", " + std::to_string(r.n) + ", " + sp.format(r.source) + ")";
}

Report Groupoids::iso_check(std::size_t depth, std::size_t samples, std::uint64_t seed) const {
  const BoundarySpace& sp = space();
  Report rep("groupoid isomorphism Θ (depth " + std::to_string(depth) + ")");
  const auto paths = sp.paths(depth);
  const auto G = g_pool(paths, depth);
  const auto RD = rd_pool(paths, depth);
  rep.fact("path pool", std::to_string(paths.size()));
  rep.fact("|G|", std::to_string(G.size()));
  rep.fact("|Γ|", std::to_string(RD.size()));

  Tally wd("Θ well defined (σ^{|α|}μ = σ^{|β|}ν, independent of representative)");
  std::map<RDElem, GElem> image;
  Tally inj("Θ injective");
  Tally recon("word matching recovers g from Θ(g)");
  for (const auto& g : G) {
    RDElem r;
    bool ok = true;
    try {
      r = theta(g);
      // Representatives (αδ)(βδ)⁻¹ for the next edges δ of the source.
      auto sh = g.t.shape();
      const std::size_t a = sh ? sh->first.size() : 0, b = sh ? sh->second.size() : 0;
      for (std::size_t d = 1; d <= 2 && g.source.has_edge(b + d); ++d) {
        ok = ok && shift_equal(g.target, a + d, g.source, b + d);
      }
    } catch (const Error&) {
      ok = false;
    }
    wd.add(ok, [&] { return format(g); });
    if (!ok) continue;
    auto [it, fresh] = image.emplace(r, g);
    inj.add(fresh, [&] { return format(g) + " and " + format(it->second) + " ↦ " + format(r); });
    bool back = false;
    try {
      back = theta_inverse(r) == g;
    } catch (const Error&) {
    }
    recon.add(back, [&] { return format(g); });
  }
  wd.emit(rep);
  inj.emit(rep);
  recon.emit(rep);

  Tally onto("Θ onto the Renault–Deaconu pool");
  for (const auto& r : RD) onto.add(image.count(r) == 1, [&] { return format(r); });
  onto.emit(rep);

  Tally units("Θ preserves units and inverses");
  for (const auto& mu : paths) units.add(theta(g_unit(mu)) == rd_unit(mu), [&] { return sp.format(mu); });
  for (const auto& g : G) {
    units.add(theta(g_inverse(g)) == rd_inverse(theta(g)), [&] { return format(g); });
  }
  units.emit(rep);

  std::map<BoundaryPath, std::vector<std::size_t>> by_target;
  for (std::size_t i = 0; i < G.size(); ++i) by_target[G[i].target].push_back(i);
  std::size_t composable = 0;
  for (const auto& g : G) {
    auto it = by_target.find(g.source);
    if (it != by_target.end()) composable += it->second.size();
  }
  rep.fact("composable pairs", std::to_string(composable));
  Tally mult("Θ multiplicative");
  Tally deg("degree additive");
  auto check_pair = [&](const GElem& a, const GElem& b) {
    GElem ab = g_compose(a, b);
    RDElem lhs = theta(ab), rhs = rd_compose(theta(a), theta(b));
    mult.add(lhs == rhs, [&] { return format(a) + " · " + format(b); });
    deg.add(lhs.n == theta(a).n + theta(b).n, [&] { return format(a) + " · " + format(b); });
  };
  if (composable <= samples) {
    for (const auto& a : G) {
      auto it = by_target.find(a.source);
      if (it == by_target.end()) continue;
      for (std::size_t j : it->second) check_pair(a, G[j]);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, G.size() - 1);
    std::size_t done = 0;
    while (done < samples) {
      const GElem& a = G[pick(rng)];
      auto it = by_target.find(a.source);
      if (it == by_target.end()) continue;
      std::uniform_int_distribution<std::size_t> pick_b(0, it->second.size() - 1);
      check_pair(a, G[it->second[pick_b(rng)]]);
      ++done;
    }
  }
  mult.emit(rep);
  deg.emit(rep);

  Tally ample("every element lies in a compact-open bisection");
  for (const auto& g : G) {
    auto sh = g.t.shape();
    const std::size_t d = std::max(sh ? sh->second.size() : 0, sp.min_universe_depth());
    const OpenSet base = action_.domain_of(g.t.inverse());
    const OpenSet dom = sp.refine(base, std::max(d, base.depth));
    bool ok = false;
    for (const auto& cell : dom.cells) {
      OpenSet one{dom.depth, {cell}};
      if (!sp.contains(one, g.source)) continue;
      Bisection b = action_.bisection(g.t, one);
      ok = sp.contains(action_.range(b), g.target);
      break;
    }
    ample.add(ok, [&] { return format(g); });
  }
  ample.emit(rep);
  return rep;
}

}  // namespace gbds
