#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gbds/stone.hpp"
#include "oracle.hpp"

using namespace gbds;

namespace {

// Bitset family of a principal filter ↑g over the whole algebra.
std::uint64_t family_of(int n, std::uint64_t g) {
  std::uint64_t f = 0;
  for (int a = 0; a < (1 << n); ++a) {
    if ((g & ~static_cast<std::uint64_t>(a)) == 0) f |= std::uint64_t{1} << a;
  }
  return f;
}

}  // namespace

TEST_CASE("lattice identities on fix_b") {
  BooleanAlgebra alg({"x", "y"});
  const Element x = alg.atom(0), y = alg.atom(1), xy = alg.unit();
  CHECK((xy & y) == y);
  CHECK((x & y).empty());
  CHECK((x | y) == xy);
  CHECK((xy - y) == x);
  CHECK((((x & xy) | (x - xy))) == x);
  CHECK(leq(y, xy));
  CHECK_FALSE(leq(x, y));
  CHECK(leq(alg.empty(), y));
  CHECK(alg.format(xy) == "{x,y}");
  CHECK(alg.format(alg.empty()) == "∅");
}

TEST_CASE("elements of different algebras do not mix") {
  BooleanAlgebra a({"x"}), b({"x"});
  CHECK_THROWS_AS(meet(a.unit(), b.unit()), StructuralError);
  CHECK_THROWS_AS(a.atom_id("nope"), StructuralError);
  CHECK_THROWS_AS(BooleanAlgebra({"x", "x"}), StructuralError);
}

TEST_CASE("ultrafilters match the brute-force filter enumeration") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
    BooleanAlgebra alg(names);
    auto expected = oracle::ultrafilters(n);
    std::vector<std::uint64_t> got;
    for (const auto& u : ultrafilters(alg)) got.push_back(family_of(n, u.as_filter().generator.bits()));
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(expected.size() == static_cast<std::size_t>(n));

    // Every filter is principal and prime exactly at atoms.
    for (auto f : oracle::filters(n)) {
      std::uint64_t g = (std::uint64_t{1} << n) - 1;
      for (int a = 0; a < (1 << n); ++a) {
        if (f >> a & 1) g &= static_cast<std::uint64_t>(a);
      }
      REQUIRE(family_of(n, g) == f);
      Filter lib = make_filter(alg.from_bits(g), alg.unit());
      CHECK(is_prime(lib) == oracle::prime(n, f));
    }
  }
}

TEST_CASE("fix_b ultrafilters and prime filters") {
  BooleanAlgebra alg({"x", "y"});
  auto us = ultrafilters(alg);
  REQUIRE(us.size() == 2);
  CHECK(us[0].atom == 0);
  CHECK(us[1].atom == 1);
  auto in_ideal = ultrafilters(alg, Ideal{alg.atom(1)});
  REQUIRE(in_ideal.size() == 1);
  CHECK(in_ideal[0].atom == 1);
  CHECK(is_prime(make_filter(alg.atom(1), alg.unit())));
  CHECK_FALSE(is_prime(make_filter(alg.unit(), alg.unit())));
  CHECK_THROWS_AS(make_filter(alg.empty(), alg.unit()), PreconditionError);
}

TEST_CASE("stone sets partition by atoms") {
  BooleanAlgebra alg({"p", "q", "r"});
  for (const auto& a : alg.elements()) {
    auto z = stone_set(alg, a);
    CHECK(z.size() == static_cast<std::size_t>(a.count()));
    for (const auto& u : z) CHECK(u.contains(a));
  }
}
