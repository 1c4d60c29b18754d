#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "gbds/paths.hpp"
#include "oracle.hpp"

using namespace gbds;

namespace {

BoundaryPath to_lib(const oracle::Path& p) {
  auto edges = [](const std::vector<oracle::E>& es) {
    std::vector<Edge> out;
    for (const auto& e : es) out.push_back({static_cast<LabelId>(e.label), static_cast<AtomId>(e.atom)});
    return out;
  };
  if (p.vertex >= 0) return BoundaryPath::vertex(static_cast<AtomId>(p.vertex));
  if (p.cycle.empty()) return BoundaryPath::finite(edges(p.stem));
  return BoundaryPath::lasso(edges(p.stem), edges(p.cycle));
}

std::vector<System> systems_under_test(std::size_t randoms) {
  std::vector<System> out{fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_b_z()};
  std::mt19937_64 rng(3);
  for (std::size_t i = 0; i < randoms; ++i) out.push_back(random_system(rng));
  return out;
}

}  // namespace

TEST_CASE("fix_b correspondence and boundary") {
  BoundarySpace sp(fixtures::fix_b());
  const auto& corr = sp.correspondence();
  CHECK(corr.vertices.size() == 2);
  REQUIRE(corr.edges.size() == 1);
  CHECK(corr.edges[0].d == 1);
  CHECK(corr.edges[0].r == std::optional<AtomId>(0));
  CHECK(sp.singular_vertices() == std::vector<AtomId>{1});
  CHECK(sp.boundary_is_finite());
  std::vector<std::string> names;
  for (const auto& p : sp.exact_boundary()) names.push_back(sp.format(p));
  CHECK(names == std::vector<std::string>{"v:y", "e:a@y"});
  CHECK_FALSE(sp.is_boundary_path(BoundaryPath::vertex(0)));
  const BoundaryPath p = sp.parse_path("e:a@y");
  CHECK(sp.shift(p) == BoundaryPath::vertex(1));
  CHECK_THROWS_AS(sp.shift(BoundaryPath::vertex(1)), PreconditionError);
  CHECK_THROWS_AS(sp.parse_path("e:a@x"), PreconditionError);
  CHECK_THROWS_AS(sp.parse_path("e:b@y"), StructuralError);
}

TEST_CASE("duals on fix_b and the empty-range marker") {
  BoundarySpace b(fixtures::fix_b());
  const Word a = b.system().parse_word("a");
  CHECK(b.dual_f(Word{}, a, 1) == std::optional<AtomId>(0));
  CHECK(b.restrict_g(Word{}, a, 1) == 1);
  CHECK(b.upclose_h(Word{}, a, 1) == 1);
  BoundarySpace z(fixtures::fix_b_z());
  CHECK_FALSE(z.dual_f(Word{}, a, 2).has_value());
  CHECK(z.dual_f(Word{}, a, 1) == std::optional<AtomId>(0));
  CHECK(z.min_universe_depth() == 1);
}

TEST_CASE("fix_a boundary consists of infinite paths") {
  BoundarySpace sp(fixtures::fix_a());
  CHECK(sp.finite_paths(3).empty());
  CHECK_FALSE(sp.boundary_is_finite());
  CHECK_THROWS_AS(sp.exact_boundary(), UnsupportedInstance);
  const BoundaryPath mu = sp.parse_path("lasso(e:a@⋆;e:b@⋆|e:b@⋆)");
  CHECK(sp.format(mu) == "lasso(e:a@⋆;e:b@⋆)");
  CHECK(sp.format(sp.parse_path("lasso(e:a@⋆;e:a@⋆)")) == "lasso(;e:a@⋆)");
  CHECK(sp.lassos(3, 3).size() == oracle::lassos(oracle::Sys::from(sp.system()), 3, 3).size());
}

TEST_CASE("path enumeration agrees with the oracle") {
  for (const System& s : systems_under_test(30)) {
    BoundarySpace sp(s);
    const auto o = oracle::Sys::from(s);
    std::set<BoundaryPath> lib_finite, ora_finite, lib_lasso, ora_lasso;
    for (const auto& p : sp.finite_paths(4)) lib_finite.insert(p);
    for (const auto& p : oracle::finite_boundary(o, 4)) ora_finite.insert(to_lib(p));
    CHECK(lib_finite == ora_finite);
    for (const auto& p : sp.lassos(4, 3)) lib_lasso.insert(p);
    for (const auto& p : oracle::lassos(o, 4, 3)) ora_lasso.insert(to_lib(p));
    CHECK(lib_lasso == ora_lasso);
    for (const auto& p : lib_finite) CHECK(sp.is_boundary_path(p));
    for (const auto& p : lib_lasso) CHECK(sp.is_boundary_path(p));
    if (sp.boundary_is_finite()) {
      const std::size_t n = s.atom_count() * s.label_count() + 1;
      CHECK(sp.exact_boundary().size() == oracle::finite_boundary(o, n).size() + oracle::lassos(o, 2 * n, n).size());
    }
  }
}

TEST_CASE("cylinder membership agrees with the oracle") {
  for (const System& s : systems_under_test(15)) {
    BoundarySpace sp(s);
    const auto o = oracle::Sys::from(s);
    const oracle::Graph g(o);
    auto pool = oracle::finite_boundary(o, 4);
    for (auto& p : oracle::lassos(o, 4, 4)) pool.push_back(p);
    for (const auto& w : o.wstar(2)) {
      Word lw;
      for (int l : w) lw.push_back(static_cast<LabelId>(l));
      const auto in = o.ideal_of(w);
      for (oracle::Mask a = 1; a <= o.full(); ++a) {
        if (!in[a]) continue;
        const OpenSet c = sp.cylinder(lw, s.algebra().from_bits(a));
        for (const auto& p : pool) {
          CHECK(sp.contains(c, to_lib(p)) == oracle::in_cylinder(o, g, p, w, a));
        }
      }
    }
  }
}

TEST_CASE("cylinder calculus report") {
  for (const System& s : systems_under_test(8)) CHECK(BoundarySpace(s).check_cylinders(4).ok());
}

TEST_CASE("four-case intersection formula on fix_b and fix_a") {
  BoundarySpace b(fixtures::fix_b());
  const auto& alg = b.system().algebra();
  const Word e{}, a = b.system().parse_word("a");
  // α = β
  CHECK(b.format(b.cylinder_intersect(e, alg.unit(), e, alg.atom(1))) == "N(ε,{y})");
  // β extends α: N(ε,{x}) ∩ N(a,{y}) = N(a, θ_a({x}) ∩ {y})
  CHECK(b.format(b.cylinder_intersect(e, alg.atom(0), a, alg.atom(1))) == "N(a,{y})");
  CHECK(b.format(b.cylinder_intersect(a, alg.atom(1), e, alg.atom(1))) == "∅");
  BoundarySpace f(fixtures::fix_a());
  const auto& one = f.system().algebra().unit();
  const Word fa = f.system().parse_word("a"), fb = f.system().parse_word("b"), fab = f.system().parse_word("ab");
  // incomparable words
  CHECK(f.cylinder_intersect(fa, one, fb, one).empty());
  CHECK(f.format(f.cylinder_intersect(fa, one, fab, one)) == "N(ab,{⋆})");
}

TEST_CASE("open sets: normal form, parsing and boolean operations") {
  BoundarySpace b(fixtures::fix_b());
  const OpenSet all = b.universe();
  CHECK(b.format(all) == "N(ε,{x,y})");
  CHECK(b.format(b.refine(all, 1)) == "N(a,{y}) ∪ {v:y}");
  const OpenSet q = b.parse_openset("N(ε,{y})");
  const OpenSet p = b.parse_openset("{e:a@y}");
  CHECK(b.equal(b.unite(p, q), all));
  CHECK(b.equal(b.complement(q), p));
  CHECK(b.subtract(all, all).empty());
  CHECK(b.subset(q, all));
  CHECK_FALSE(b.subset(all, q));
  CHECK(b.equal(b.parse_openset("{v:y}"), q));
  CHECK(b.parse_openset("∅").empty());
  CHECK(b.equal(b.parse_openset("all"), all));
  CHECK_THROWS_AS(b.parse_openset("N(a,{x})"), PreconditionError);
  CHECK_THROWS_AS(b.parse_openset("M(a,{y})"), StructuralError);
  BoundarySpace f(fixtures::fix_a());
  CHECK_THROWS_AS(f.parse_openset("{lasso(;e:a@⋆)}"), PreconditionError);
}
