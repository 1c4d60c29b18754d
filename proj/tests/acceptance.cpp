// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "gbds/groupoid.hpp"
#include "gbds/ideal_shadow.hpp"
#include "gbds/reconstruction.hpp"
#include "gbds/semigroup.hpp"
#include "gbds/summary.hpp"
#include "oracle.hpp"

using namespace gbds;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  std::string failures;

  void require(const Report& r, const std::string& where) {
    if (r.ok()) return;
    pass = false;
    failures += where + "\n" + r.text();
  }
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    failures += what + "\n";
  }
};

std::vector<System> random_systems(std::size_t n) {
  std::mt19937_64 rng(0);
  std::vector<System> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(random_system(rng));
  return out;
}

Outcome semigroup_laws() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  o.require(Semigroup(fixtures::fix_a()).check_laws(2), "fix_a");
  o.require(Semigroup(fixtures::fix_b()).check_laws(2), "fix_b");
  std::size_t i = 0;
  for (const System& s : random_systems(100)) {
    o.require(Semigroup(s).check_laws(1), "random system " + std::to_string(i++));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << secs << " s";
  o.notes.push_back(os.str());
  return o;
}

Outcome tight_filters() {
  Outcome o;
  o.require(BoundarySpace(fixtures::fix_a()).check_tight(4, 3), "fix_a");
  o.require(BoundarySpace(fixtures::fix_b()).check_tight(4, 3), "fix_b");
  std::size_t i = 0;
  for (const System& s : random_systems(50)) {
    o.require(BoundarySpace(s).check_tight(4, 3), "random system " + std::to_string(i++));
  }
  return o;
}

Outcome cylinders() {
  Outcome o;
  o.require(BoundarySpace(fixtures::fix_a()).check_cylinders(5), "fix_a");
  o.require(BoundarySpace(fixtures::fix_b()).check_cylinders(5), "fix_b");
  std::size_t i = 0;
  for (const System& s : random_systems(50)) {
    o.require(BoundarySpace(s).check_cylinders(5), "random system " + std::to_string(i++));
  }
  return o;
}

Outcome axioms() {
  Outcome o;
  for (const auto& [name, s] : {std::pair{"fix_a", fixtures::fix_a()}, std::pair{"fix_b", fixtures::fix_b()},
                                std::pair{"fix_b_z", fixtures::fix_b_z()}}) {
    o.require(PartialAction(BoundarySpace(s)).check_axioms(4, 500), name);
  }
  return o;
}

Outcome representation() {
  Outcome o;
  for (const auto& [name, s] : {std::pair{"fix_a", fixtures::fix_a()}, std::pair{"fix_b", fixtures::fix_b()},
                                std::pair{"fix_b_z", fixtures::fix_b_z()}}) {
    PartialAction pa{BoundarySpace(s)};
    o.require(pa.ck_check(3), name);
    o.require(pa.factorization_check(3), name);
  }
  return o;
}

Outcome groupoid_iso() {
  Outcome o;
  Groupoids b{PartialAction{BoundarySpace(fixtures::fix_b())}};
  const auto paths = b.space().exact_boundary();
  const std::size_t g = b.g_pool(paths, 2).size();
  const auto os = oracle::Sys::from(fixtures::fix_b());
  const std::size_t expect = oracle::rd_count(oracle::finite_boundary(os, 3), 2);
  o.require(g == 4 && expect == 4, "fix_b groupoid has " + std::to_string(g) + " elements");
  o.require(b.iso_check(2, 1000), "fix_b");
  o.notes.push_back("|G(fix_b)| = " + std::to_string(g));
  Groupoids a{PartialAction{BoundarySpace(fixtures::fix_a())}};
  o.require(a.iso_check(4, 1000), "fix_a");
  return o;
}

Outcome reconstruction() {
  Outcome o;
  std::mt19937_64 rng(0);
  for (int i = 0; i < 200; ++i) {
    const auto act = random_action(rng, 6, 3);
    const std::string where = "random action " + std::to_string(i) + "\n" + format_action(act);
    o.require(verify_conjugacy(act), where);
    const auto s = oracle::Sys::from(derive_bds(act));
    const std::size_t n = act.points.size();
    o.require(oracle::finite_boundary(s, n).size() + oracle::lassos(s, 2 * n, n).size() == n,
              where + "oracle boundary size differs from |X|");
  }
  o.require(same_system(derive_bds(fixtures::fix_b_prime()), fixtures::fix_b()), "fix_b' does not give fix_b");
  return o;
}

Outcome golden() {
  Outcome o;
  const std::string got = boundary_summary(fixtures::fix_b(), 2);
  const auto want = oracle::summary(oracle::Sys::from(fixtures::fix_b()), 2);
  o.require(want.has_value() && got == *want, "summary:\n" + got + "oracle:\n" + want.value_or("(none)\n"));
  return o;
}

Outcome invariance() {
  Outcome o;
  PartialAction pa{BoundarySpace(fixtures::fix_b())};
  const BoundarySpace& sp = pa.space();
  const System& s = pa.system();
  const auto q = check_invariance(pa, sp.parse_openset("{v:y}"), 2);
  o.require(!q.invariant() && q.generator == "a" && sp.format(q.witness) == "{e:a@y}", "{q} not rejected");
  o.require(check_invariance(pa, sp.empty_set(), 2).invariant(), "∅ rejected");
  const auto all = check_invariance(pa, sp.universe(), 2);
  o.require(all.invariant(), "∂E rejected");
  if (!all.invariant()) return o;
  const LazyBDS lazy = restrict(pa, *all.certified);
  for (const Element& a : s.algebra().elements()) {
    auto n = [&](const Element& b) { return b.empty() ? sp.empty_set() : sp.cylinder(Word{}, b); };
    for (LabelId l = 0; l < s.label_count(); ++l) {
      o.require(sp.equal(lazy.theta(l, n(a)), n(s.apply(l, a))), "induced action differs at " + s.format(a));
    }
  }
  o.require(lazy.check_homomorphism(), "induced action");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"inverse semigroup laws", semigroup_laws},
      {"filters and tight filters", tight_filters},
      {"cylinder calculus", cylinders},
      {"partial action axioms", axioms},
      {"representation relations", representation},
      {"groupoid isomorphism", groupoid_iso},
      {"reconstruction from finite actions", reconstruction},
      {"fix_b summary against oracle", golden},
      {"invariant open sets", invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Outcome o = criteria[i].second();
    std::string line = "criterion " + std::to_string(i + 1) + ": " + (o.pass ? "PASS" : "FAIL") + "  " +
                       criteria[i].first;
    for (const auto& n : o.notes) line += " (" + n + ")";
    std::cout << line << std::endl;
    if (!o.pass) {
      ++failed;
      std::cerr << o.failures;
    }
  }
  return failed == 0 ? 0 : 1;
}
