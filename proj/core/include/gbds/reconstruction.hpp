#pragma once

// Boolean dynamical systems from orthogonal partial actions of the free
// group on a finite set, and the conjugacy back to the boundary path space.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gbds/paths.hpp"
#include "gbds/report.hpp"

namespace gbds {

using PointId = std::size_t;

struct GeneratorData {
  std::string label;
  std::vector<PointId> V;      // V_α, sorted
  std::vector<PointId> V_inv;  // V_{α⁻¹}, sorted
  /// ρ_α as pairs (from ∈ V_{α⁻¹}, to ∈ V_α).
  std::vector<std::pair<PointId, PointId>> rho;
};

struct FinitePartialAction {
  std::vector<std::string> points;
  std::vector<GeneratorData> generators;
};

struct Itinerary {
  Word word;                    // finite part (prefix for a lasso)
  Word cycle;                   // empty for finite itineraries
  std::vector<PointId> points;  // x_0, x_1, … up to the first repeat

  bool lasso() const noexcept { return !cycle.empty(); }
};

/// Orthogonality, bijectivity of each ρ_α, and partial-action axioms of the
/// composites on reduced words of length ≤ maxlen.
Report validate_action(const FinitePartialAction& a, std::size_t maxlen = 3);

/// ℬ = all subsets of X, θ_α(A) = ρ_{α⁻¹}(A ∩ V_α), I_α = R_α.
System derive_bds(const FinitePartialAction& a);
Itinerary itinerary(const FinitePartialAction& a, PointId x);
/// f(x) as a boundary path of derive_bds(a).
BoundaryPath conjugacy_map(const FinitePartialAction& a, PointId x);

/// Bijectivity and equivariance of f against `a`, using the derived system
/// and map given. Passing data derived from a different action detects
/// where the two disagree.
Report verify_conjugacy(const FinitePartialAction& a, const System& derived,
                        const std::vector<BoundaryPath>& f, std::size_t maxlen = 3);
Report verify_conjugacy(const FinitePartialAction& a, std::size_t maxlen = 3);

struct Disjointification {
  std::vector<std::set<std::size_t>> parts;
  /// index_sets[i]: indices of the parts whose union is family[i].
  std::vector<std::set<std::size_t>> index_sets;
};
/// Atoms of the Boolean algebra generated by the family, ordered by their
/// smallest element.
Disjointification disjointify(const std::vector<std::set<std::size_t>>& family);

/// The partial action of 𝔽 on ∂E (finite), derived again into a system.
/// Throws UnsupportedInstance when ∂E is infinite.
FinitePartialAction boundary_action(const BoundarySpace& space);
/// boundary_action, derive_bds and a check that f is equivariant for every
/// reduced t with |t| ≤ maxlen, which makes the groupoids isomorphic.
Report roundtrip(const System& sys, std::size_t maxlen = 3);

/// Structural equality: same atom names, labels, action images and ideals.
bool same_system(const System& a, const System& b);

/// |X| ≤ max_points, up to max_generators generators.
FinitePartialAction random_action(std::mt19937_64& rng, std::size_t max_points = 6,
                                  std::size_t max_generators = 3);

std::string format_action(const FinitePartialAction& a);

}  // namespace gbds
