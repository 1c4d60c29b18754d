#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"

using namespace gbds;

namespace {

oracle::Seq seq(const Word& w) {
  oracle::Seq s;
  for (std::size_t i = 0; i < w.size(); ++i) s.push_back(w[i]);
  return s;
}

std::vector<System> sample_systems(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<System> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_system(rng));
  return out;
}

}  // namespace

TEST_CASE("fix_b actions and words") {
  const System s = fixtures::fix_b();
  const auto& alg = s.algebra();
  CHECK(s.is_valid());
  CHECK(s.apply_word(s.parse_word("a"), alg.atom(0)) == alg.atom(1));
  CHECK(s.apply_word(s.parse_word("aa"), alg.atom(0)).empty());
  CHECK(s.apply_word(Word{}, alg.atom(0)) == alg.atom(0));
  CHECK(s.delta(alg.atom(1)).empty());
  CHECK(s.is_singular_atom(1));
  CHECK_FALSE(s.is_singular_atom(0));
  CHECK(s.is_regular(alg.atom(0)));
  CHECK_FALSE(s.is_regular(alg.unit()));
  CHECK(s.word_gen(s.parse_word("a")) == alg.atom(1));
  CHECK(s.word_gen(s.parse_word("aa")).empty());
  CHECK(s.pre(0, 1) == std::optional<AtomId>(0));
  CHECK_FALSE(s.pre(0, 0).has_value());
  CHECK(s.format_word(Word{}) == "ε");
}

TEST_CASE("fix_a acts by the identity") {
  const System s = fixtures::fix_a();
  CHECK(s.apply_word(s.parse_word("ab"), s.algebra().unit()) == s.algebra().unit());
  CHECK(s.wstar(2).size() == 7);
  CHECK(s.singular_atoms().empty());
}

TEST_CASE("overlapping images are rejected with both atoms named") {
  BooleanAlgebra alg({"x", "y", "z"});
  Action a{"a", {alg.atom(2), alg.atom(2), alg.empty()}};
  const System s(alg, {a});
  CHECK_FALSE(s.is_valid());
  const Report r = s.validate();
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.first_failure()->value == "images of atoms x and y overlap");
  CHECK_THROWS_AS(s.require_valid(), PreconditionError);
}

TEST_CASE("ideal not containing the range is reported") {
  BooleanAlgebra alg({"x", "y"});
  Action a{"a", {alg.atom(1), alg.empty()}};
  const System s(alg, {a}, {alg.atom(0)});
  CHECK_FALSE(s.is_valid());
}

TEST_CASE("word ideals and W* agree with the oracle") {
  auto systems = sample_systems(40, 11);
  systems.push_back(fixtures::fix_a());
  systems.push_back(fixtures::fix_b());
  systems.push_back(fixtures::fix_b_z());
  for (const System& s : systems) {
    REQUIRE(s.is_valid());
    const auto o = oracle::Sys::from(s);
    std::vector<oracle::Seq> got;
    for (const Word& w : s.wstar(3)) got.push_back(seq(w));
    CHECK(got == o.wstar(3));
    for (const auto& w : o.words(3)) {
      Word lw;
      for (int l : w) lw.push_back(static_cast<LabelId>(l));
      const auto in = o.ideal_of(w);
      const Element g = s.word_gen(lw);
      for (oracle::Mask a = 0; a <= o.full(); ++a) CHECK(in[a] == ((a & ~g.bits()) == 0));
    }
  }
}

TEST_CASE("random systems are valid and deterministic") {
  auto a = sample_systems(20, 0), b = sample_systems(20, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].is_valid());
    CHECK(a[i].atom_count() <= 4);
    CHECK(a[i].label_count() <= 3);
    CHECK(oracle::Sys::from(a[i]).img == oracle::Sys::from(b[i]).img);
  }
}
