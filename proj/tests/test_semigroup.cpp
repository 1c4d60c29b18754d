#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gbds/paths.hpp"
#include "oracle.hpp"

using namespace gbds;

namespace {

oracle::Seq seq(const Word& w) {
  oracle::Seq s;
  for (std::size_t i = 0; i < w.size(); ++i) s.push_back(w[i]);
  return s;
}

oracle::Elem to_oracle(const SgElem& e) {
  if (e.zero) return {};
  return {false, seq(e.alpha), static_cast<oracle::Mask>(e.set.bits()), seq(e.beta)};
}

std::vector<System> systems_under_test() {
  std::vector<System> out{fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_b_z()};
  std::mt19937_64 rng(5);
  for (int i = 0; i < 25; ++i) out.push_back(random_system(rng));
  return out;
}

}  // namespace

TEST_CASE("fix_b semigroup elements with |α|, |β| ≤ 2") {
  Semigroup sg(fixtures::fix_b());
  const auto elems = sg.enumerate(2);
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(sg.format(e));
  const std::vector<std::string> expected{"(ε,{x},ε)", "(ε,{y},ε)", "(ε,{x,y},ε)",
                                          "(ε,{y},a)", "(a,{y},ε)", "(a,{y},a)"};
  CHECK(names == expected);
  CHECK(oracle::elements(oracle::Sys::from(sg.system()), 2).size() == 6);
}

TEST_CASE("enumeration and products agree with the oracle") {
  for (const System& s : systems_under_test()) {
    Semigroup sg(s);
    const auto o = oracle::Sys::from(s);
    const std::size_t len = s.label_count() > 2 ? 1 : 2;
    const auto elems = sg.enumerate(len);
    std::vector<oracle::Elem> got;
    for (const auto& e : elems) got.push_back(to_oracle(e));
    std::sort(got.begin(), got.end());
    const auto expected = oracle::elements(o, len);
    REQUIRE(got == expected);
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        CHECK(to_oracle(sg.multiply(x, y)) == oracle::multiply(o, to_oracle(x), to_oracle(y)));
      }
      CHECK(to_oracle(Semigroup::star(x)) == oracle::Elem{false, seq(x.beta), static_cast<oracle::Mask>(x.set.bits()),
                                                          seq(x.alpha)});
    }
  }
}

TEST_CASE("inverse semigroup laws") {
  CHECK(Semigroup(fixtures::fix_a()).check_laws(2).ok());
  CHECK(Semigroup(fixtures::fix_b()).check_laws(2).ok());
  CHECK(Semigroup(fixtures::fix_b_z()).check_laws(2).ok());
}

TEST_CASE("checked constructor and natural order") {
  Semigroup sg(fixtures::fix_b());
  const auto& alg = sg.system().algebra();
  const Word a = sg.system().parse_word("a");
  CHECK_THROWS_AS(sg.make(a, alg.atom(0), a), PreconditionError);
  CHECK_THROWS_AS(sg.make(Word{}, alg.empty(), Word{}), PreconditionError);
  const SgElem p = sg.make(Word{}, alg.atom(1), Word{});
  const SgElem q = sg.make(Word{}, alg.unit(), Word{});
  CHECK(sg.idempotent_leq(p, q));
  CHECK_FALSE(sg.idempotent_leq(q, p));
  CHECK(sg.multiply(sg.make(a, alg.atom(1), Word{}), sg.make(Word{}, alg.atom(0), Word{})).is_zero());
  CHECK(sg.format(sg.multiply(sg.make(Word{}, alg.atom(1), a), sg.make(a, alg.atom(1), Word{}))) == "(ε,{y},ε)");
}

TEST_CASE("tight filters correspond to boundary paths") {
  for (const System& s : systems_under_test()) {
    BoundarySpace sp(s);
    const auto o = oracle::Sys::from(s);
    const auto tight = sp.semigroup().tight_filters(3, 2);
    std::size_t finite = 0, infinite = 0;
    for (const auto& xi : tight) (xi.infinite() ? infinite : finite)++;
    CHECK(finite == oracle::finite_boundary(o, 3).size());
    CHECK(infinite == oracle::lassos(o, 5, 2, 3).size());
    CHECK(sp.check_tight(3, 2).ok());
  }
}

TEST_CASE("fix_b filters") {
  BoundarySpace sp(fixtures::fix_b());
  const Semigroup& sg = sp.semigroup();
  const auto& alg = sp.system().algebra();
  const auto finite = sg.finite_filters(4);
  CHECK(finite.size() == 4);
  const auto tight = sg.tight_filters(4, 3);
  REQUIRE(tight.size() == 2);
  CHECK(sp.format(sp.tight_to_boundary(tight[0])) == "v:y");
  CHECK(sp.format(sp.tight_to_boundary(tight[1])) == "e:a@y");
  // ↑{x,y} at ε is a filter but not tight.
  const FilterE top = sg.filter_from_family(Word{}, {alg.unit()});
  CHECK_FALSE(sg.is_tight(top));
  CHECK_THROWS_AS(sp.tight_to_boundary(top), PreconditionError);
  // Incomplete family: G_1 = {y} forces G_0 = {x}.
  CHECK_THROWS_AS(sg.filter_from_family(sp.system().parse_word("a"), {alg.unit(), alg.atom(1)}), ValidationError);
}
