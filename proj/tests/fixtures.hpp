#pragma once

#include "gbds/reconstruction.hpp"
#include "gbds/system.hpp"

namespace fixtures {

// One atom, two labels acting as the identity, full ideals.
inline gbds::System fix_a() {
  gbds::BooleanAlgebra alg({"⋆"});
  gbds::Action a{"a", {alg.atom(0)}}, b{"b", {alg.atom(0)}};
  return gbds::System(alg, {a, b}, {alg.unit(), alg.unit()});
}

// x ↦ {y}, y ↦ ∅ under a; I_a generated by {y}.
inline gbds::System fix_b() {
  gbds::BooleanAlgebra alg({"x", "y"});
  gbds::Action a{"a", {alg.atom(1), alg.empty()}};
  return gbds::System(alg, {a}, {alg.atom(1)});
}

// fix_b plus an atom z inside I_a that is not in the range of θ_a, so the
// edge at z has an empty range.
inline gbds::System fix_b_z() {
  gbds::BooleanAlgebra alg({"x", "y", "z"});
  gbds::Action a{"a", {alg.atom(1), alg.empty(), alg.empty()}};
  return gbds::System(alg, {a}, {alg.from_atoms({1, 2})});
}

// Two-point action whose derived system is fix_b.
inline gbds::FinitePartialAction fix_b_prime() {
  gbds::FinitePartialAction a;
  a.points = {"x", "y"};
  a.generators.push_back({"a", {0}, {1}, {{1, 0}}});
  return a;
}

}  // namespace fixtures
