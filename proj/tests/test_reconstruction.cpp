#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gbds/reconstruction.hpp"
#include "oracle.hpp"

using namespace gbds;

TEST_CASE("fix_b' reproduces fix_b") {
  const auto a = fixtures::fix_b_prime();
  CHECK(validate_action(a).ok());
  const System s = derive_bds(a);
  CHECK(same_system(s, fixtures::fix_b()));
  BoundarySpace sp(s);
  CHECK(sp.format(conjugacy_map(a, 0)) == "e:a@y");
  CHECK(sp.format(conjugacy_map(a, 1)) == "v:y");
  const Itinerary it = itinerary(a, 0);
  CHECK(it.word.size() == 1);
  CHECK_FALSE(it.lasso());
  CHECK(it.points == std::vector<PointId>{0, 1});
  CHECK(verify_conjugacy(a).ok());
}

TEST_CASE("swapped conjugacy data is detected") {
  const auto a = fixtures::fix_b_prime();
  const System s = derive_bds(a);
  const std::vector<BoundaryPath> f{conjugacy_map(a, 1), conjugacy_map(a, 0)};
  CHECK_FALSE(verify_conjugacy(a, s, f).ok());
}

TEST_CASE("validation of actions") {
  FinitePartialAction overlap;
  overlap.points = {"p", "q", "r"};
  overlap.generators.push_back({"a", {0}, {1}, {{1, 0}}});
  overlap.generators.push_back({"b", {0}, {2}, {{2, 0}}});
  CHECK_FALSE(validate_action(overlap).ok());
  FinitePartialAction broken;
  broken.points = {"p", "q"};
  broken.generators.push_back({"a", {0}, {1}, {}});
  CHECK_FALSE(validate_action(broken).ok());
  CHECK_THROWS_AS(derive_bds(broken), PreconditionError);
}

TEST_CASE("random actions: conjugacy and boundary size") {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 40; ++i) {
    const auto a = random_action(rng);
    REQUIRE(validate_action(a).ok());
    const Report r = verify_conjugacy(a);
    CHECK_MESSAGE(r.ok(), r.text());
    const auto o = oracle::Sys::from(derive_bds(a));
    const std::size_t n = a.points.size();
    CHECK(oracle::finite_boundary(o, n).size() + oracle::lassos(o, 2 * n, n).size() == n);
  }
}

TEST_CASE("disjointification") {
  const auto d = disjointify({{0, 1}, {1, 2}});
  REQUIRE(d.parts.size() == 3);
  CHECK(d.parts[0] == std::set<std::size_t>{0});
  CHECK(d.parts[1] == std::set<std::size_t>{1});
  CHECK(d.parts[2] == std::set<std::size_t>{2});
  CHECK(d.index_sets[0] == std::set<std::size_t>{0, 1});
  CHECK(d.index_sets[1] == std::set<std::size_t>{1, 2});
}

TEST_CASE("boundary round trip") {
  CHECK(roundtrip(fixtures::fix_b()).ok());
  CHECK(roundtrip(fixtures::fix_b_z()).ok());
  CHECK_THROWS_AS(roundtrip(fixtures::fix_a()), UnsupportedInstance);
  const auto act = boundary_action(BoundarySpace(fixtures::fix_b()));
  CHECK(act.points.size() == 2);
}
