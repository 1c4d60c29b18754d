#include <doctest.h>

#include "fixtures.hpp"
#include "gbds/ideal_shadow.hpp"

using namespace gbds;

namespace {

// Every union of atomic cells of ∂E at the given depth.
std::vector<OpenSet> all_open_sets(const BoundarySpace& sp, std::size_t depth) {
  const OpenSet u = sp.refine(sp.universe(), depth);
  std::vector<OpenSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << u.cells.size()); ++mask) {
    std::vector<CellKey> cells;
    for (std::size_t i = 0; i < u.cells.size(); ++i) {
      if (mask >> i & 1) cells.push_back(u.cells[i]);
    }
    out.push_back(sp.make(u.depth, cells));
  }
  return out;
}

}  // namespace

TEST_CASE("fix_b invariance") {
  PartialAction pa{BoundarySpace(fixtures::fix_b())};
  const BoundarySpace& sp = pa.space();
  const auto q = check_invariance(pa, sp.parse_openset("N(ε,{y})"), 2);
  CHECK_FALSE(q.invariant());
  CHECK(q.generator == "a");
  CHECK(sp.format(q.witness) == "{e:a@y}");
  CHECK(check_invariance(pa, sp.universe(), 2).invariant());
  CHECK(check_invariance(pa, sp.empty_set(), 2).invariant());
  CHECK_FALSE(check_invariance(pa, sp.parse_openset("N(ε,{x})"), 2).invariant());
}

TEST_CASE("generator invariance is word invariance") {
  for (const System& s : {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_b_z()}) {
    PartialAction pa{BoundarySpace(s)};
    const std::size_t depth = s.label_count() > 1 ? 2 : 1;
    for (const auto& set : all_open_sets(pa.space(), std::max(depth, pa.space().min_universe_depth()))) {
      CHECK(check_invariance(pa, set, depth).invariant() == invariant_under_words(pa, set, 3));
    }
  }
}

TEST_CASE("induced system on ∂E of fix_b is θ") {
  PartialAction pa{BoundarySpace(fixtures::fix_b())};
  const BoundarySpace& sp = pa.space();
  const System& s = pa.system();
  const auto cert = check_invariance(pa, sp.universe(), 2).certified;
  REQUIRE(cert.has_value());
  const LazyBDS lazy = restrict(pa, *cert);
  for (const Element& a : s.algebra().elements()) {
    const OpenSet na = a.empty() ? sp.empty_set() : sp.cylinder(Word{}, a);
    CHECK(sp.equal(lazy.theta(0, na), a.empty() ? sp.empty_set() : sp.cylinder(Word{}, s.apply(0, a))));
    CHECK(lazy.delta(na).size() == s.delta(a).size());
    if (!a.empty()) CHECK(lazy.is_regular(na) == s.is_regular(a));
  }
  CHECK(lazy.check_homomorphism().ok());
}

TEST_CASE("fix_a: induced action strips the leading label") {
  PartialAction pa{BoundarySpace(fixtures::fix_a())};
  const BoundarySpace& sp = pa.space();
  const auto cert = check_invariance(pa, sp.universe(), 2).certified;
  REQUIRE(cert.has_value());
  const LazyBDS lazy = restrict(pa, *cert);
  CHECK(sp.format(lazy.theta(0, sp.parse_openset("N(ab,{⋆})"))) == "N(b,{⋆})");
  CHECK(lazy.theta(1, sp.parse_openset("N(ab,{⋆})")).empty());
  CHECK_THROWS_AS(lazy.theta(0, sp.parse_openset("N(aba,{⋆})")), DepthExceeded);
  CHECK(lazy.atoms().size() == 4);
  CHECK(lazy.check_homomorphism().ok());
}

TEST_CASE("empty invariant set") {
  PartialAction pa{BoundarySpace(fixtures::fix_b())};
  const LazyBDS lazy = restrict(pa, InvariantOpenSet{pa.space().empty_set(), 1});
  CHECK(lazy.atoms().empty());
  CHECK_THROWS_AS(lazy.theta(0, pa.space().universe()), PreconditionError);
}
