#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gbds/groupoid.hpp"
#include "oracle.hpp"

using namespace gbds;

TEST_CASE("fix_b groupoid has four elements") {
  Groupoids gr{PartialAction{BoundarySpace(fixtures::fix_b())}};
  const BoundarySpace& sp = gr.space();
  const auto paths = sp.exact_boundary();
  CHECK(gr.g_pool(paths, 2).size() == 4);
  CHECK(gr.rd_pool(paths, 2).size() == 4);
  const auto o = oracle::Sys::from(sp.system());
  CHECK(oracle::rd_count(oracle::finite_boundary(o, 3), 2) == 4);

  const BoundaryPath p = sp.parse_path("e:a@y"), q = sp.parse_path("v:y");
  const RDElem pq = gr.rd_make(p, 1, 0, q);
  CHECK(pq.n == 1);
  CHECK(gr.rd_compose(pq, gr.rd_inverse(pq)) == gr.rd_unit(p));
  const GElem g = gr.g_make(FreeGroupElem::parse(sp.system(), "a"), q);
  CHECK(g.target == p);
  CHECK(gr.theta(g) == pq);
  CHECK(gr.theta_inverse(pq) == g);
  CHECK(gr.format(pq) == "(e:a@y, 1, v:y)");
  CHECK_THROWS_AS(gr.rd_make(p, 0, 0, q), PreconditionError);
  CHECK_THROWS_AS(gr.g_compose(g, g), PreconditionError);
  const Report r = gr.iso_check(2, 1000);
  CHECK_MESSAGE(r.ok(), r.text());
}

TEST_CASE("full groupoids of finite boundaries match the oracle") {
  std::mt19937_64 rng(29);
  int seen = 0;
  for (int i = 0; i < 60 && seen < 15; ++i) {
    const System s = random_system(rng);
    BoundarySpace sp(s);
    if (!sp.boundary_is_finite()) continue;
    const auto paths = sp.exact_boundary();
    bool has_lasso = false;
    std::size_t longest = 0;
    for (const auto& mu : paths) {
      has_lasso = has_lasso || mu.infinite();
      if (!mu.infinite()) longest = std::max(longest, mu.length());
    }
    if (has_lasso) continue;
    ++seen;
    Groupoids gr{PartialAction{sp}};
    const auto o = oracle::Sys::from(s);
    const std::size_t depth = 2 * longest;
    CHECK(gr.rd_pool(paths, depth).size() == oracle::rd_count(oracle::finite_boundary(o, longest), depth));
    CHECK(gr.g_pool(paths, depth).size() == gr.rd_pool(paths, depth).size());
  }
  CHECK(seen > 5);
}

TEST_CASE("isomorphism on fix_a and fix_b_z") {
  Groupoids a{PartialAction{BoundarySpace(fixtures::fix_a())}};
  const Report ra = a.iso_check(3, 400);
  CHECK_MESSAGE(ra.ok(), ra.text());
  Groupoids z{PartialAction{BoundarySpace(fixtures::fix_b_z())}};
  const Report rz = z.iso_check(3, 400);
  CHECK_MESSAGE(rz.ok(), rz.text());
}
