#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gbds/ideal_shadow.hpp"
#include "gbds/partial_action.hpp"
#include "oracle.hpp"

using namespace gbds;

namespace {

BoundaryPath to_lib(const oracle::Path& p) {
  std::vector<Edge> es;
  for (const auto& e : p.stem) es.push_back({static_cast<LabelId>(e.label), static_cast<AtomId>(e.atom)});
  if (p.vertex >= 0) return BoundaryPath::vertex(static_cast<AtomId>(p.vertex));
  return BoundaryPath::finite(es);
}

FreeGroupElem g(const System& s, const char* text) { return FreeGroupElem::parse(s, text); }

}  // namespace

TEST_CASE("fix_b domains and the action on paths") {
  PartialAction pa{BoundarySpace(fixtures::fix_b())};
  const System& s = pa.system();
  const BoundarySpace& sp = pa.space();
  CHECK(sp.format(pa.domain_of(g(s, "a"))) == "N(a,{y})");
  CHECK(sp.format(pa.domain_of(g(s, "a⁻¹"))) == "N(ε,{y})");
  CHECK(sp.equal(pa.domain_of(FreeGroupElem{}), sp.universe()));
  const BoundaryPath q = sp.parse_path("v:y"), p = sp.parse_path("e:a@y");
  CHECK(pa.act(g(s, "a"), q) == p);
  CHECK(pa.act(g(s, "a^-1"), p) == q);
  CHECK(pa.act(FreeGroupElem{}, p) == p);
  CHECK_THROWS_AS(pa.act(g(s, "a"), p), DomainError);
  CHECK_FALSE(pa.in_domain(g(s, "a⁻¹"), q));
  CHECK(sp.format(pa.act_on_openset(g(s, "a"), pa.domain_of(g(s, "a⁻¹")))) == "N(a,{y})");
  CHECK_THROWS_AS(pa.act_on_openset(g(s, "a"), sp.universe()), PreconditionError);
}

TEST_CASE("fix_a: domains of non-shaped elements are empty") {
  PartialAction pa{BoundarySpace(fixtures::fix_a())};
  const System& s = pa.system();
  const BoundarySpace& sp = pa.space();
  CHECK(pa.domain_of(g(s, "a⁻¹b")).empty());
  CHECK(sp.format(pa.domain_of(g(s, "ab⁻¹"))) == "N(a,{⋆})");
  const BoundaryPath mu = sp.parse_path("lasso(;e:b@⋆)");
  CHECK(sp.format(pa.act(g(s, "ab⁻¹"), mu)) == "lasso(e:a@⋆;e:b@⋆)");
  CHECK(sp.format(pa.act(g(s, "b⁻¹"), mu)) == "lasso(;e:b@⋆)");
}

TEST_CASE("prepending and shifting agree with the oracle") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const System s = random_system(rng);
    PartialAction pa{BoundarySpace(s)};
    const auto o = oracle::Sys::from(s);
    const oracle::Graph gr(o);
    const auto pool = oracle::finite_boundary(o, 3);
    for (const auto& w : o.wstar(2)) {
      if (w.empty()) continue;
      Word lw;
      for (int l : w) lw.push_back(static_cast<LabelId>(l));
      const FreeGroupElem t = FreeGroupElem::of(lw);
      for (const auto& nu : pool) {
        const auto r = oracle::range_of(gr, nu);
        const bool in = r && (o.ideal_of(w)[oracle::Mask{1} << *r]);
        INFO(s.format_word(lw), " ", pa.space().format(to_lib(nu)), " ", s.is_valid());
        REQUIRE(pa.in_domain(t, to_lib(nu)) == in);
        if (!in) continue;
        auto mu = oracle::prepend(o, gr, w, nu);
        REQUIRE(mu.has_value());
        CHECK(pa.act(t, to_lib(nu)) == to_lib(*mu));
        CHECK(pa.act(t.inverse(), to_lib(*mu)) == to_lib(*oracle::shift_finite(*mu, w.size())));
      }
    }
  }
}

TEST_CASE("partial action axioms and representation relations") {
  for (const System& s : {fixtures::fix_a(), fixtures::fix_b(), fixtures::fix_b_z()}) {
    PartialAction pa{BoundarySpace(s)};
    const Report ax = pa.check_axioms(3, 200);
    CHECK_MESSAGE(ax.ok(), ax.text());
    const Report ck = pa.ck_check(3);
    CHECK_MESSAGE(ck.ok(), ck.text());
  }
  std::mt19937_64 rng(23);
  for (int i = 0; i < 6; ++i) {
    PartialAction pa{BoundarySpace(random_system(rng, 3, 2))};
    CHECK(pa.check_axioms(2, 100).ok());
    CHECK(pa.ck_check(2).ok());
  }
}

TEST_CASE("bisections on fix_b") {
  PartialAction pa{BoundarySpace(fixtures::fix_b())};
  const auto& alg = pa.system().algebra();
  const Word a = pa.system().parse_word("a");
  const Bisection s = pa.partial_isometry(a, alg.atom(1));
  CHECK(pa.format(s) == "(a, N(ε,{y}))");
  CHECK(pa.equal(pa.mul(s, pa.star(s)), pa.projection(alg.atom(0))));
  CHECK(pa.equal(pa.mul(pa.star(s), s), pa.projection(alg.atom(1))));
  CHECK(pa.equal(pa.mul(s, s), pa.projection(alg.empty())));
  CHECK(pa.equal(pa.mul(pa.projection(alg.unit()), pa.projection(alg.atom(1))), pa.projection(alg.atom(1))));
  CHECK_THROWS_AS(pa.partial_isometry(a, alg.atom(0)), PreconditionError);
  CHECK(grading_degree(s) == 1);
  CHECK(grading_degree(pa.projection(alg.unit())) == 0);
  CHECK(grading_degree(pa.star(s)) == -1);
  CHECK(grading_degree(pa.mul(pa.star(s), s)) == 0);
}
