#pragma once

// The transformation groupoid 𝔽 ⋉ ∂E and the Renault–Deaconu groupoid
// Γ(∂E, σ) on finite path pools, and the isomorphism Θ between them.

#include <cstdint>
#include <string>
#include <vector>

#include "gbds/partial_action.hpp"

namespace gbds {

/// (target, t, source) with target = φ_t(source).
struct GElem {
  BoundaryPath target;
  FreeGroupElem t;
  BoundaryPath source;

  friend bool operator==(const GElem&, const GElem&) = default;
  friend auto operator<=>(const GElem&, const GElem&) = default;
};

/// (target, k − l, source) with σ^k(target) = σ^l(source). Comparison
/// ignores the witnesses.
struct RDElem {
  BoundaryPath target;
  long n = 0;
  BoundaryPath source;
  std::size_t k = 0;
  std::size_t l = 0;

  friend bool operator==(const RDElem& a, const RDElem& b) {
    return a.n == b.n && a.target == b.target && a.source == b.source;
  }
  friend bool operator<(const RDElem& a, const RDElem& b) {
    if (a.target != b.target) return a.target < b.target;
    if (a.n != b.n) return a.n < b.n;
    return a.source < b.source;
  }
};

class Groupoids {
 public:
  explicit Groupoids(PartialAction action);

  const PartialAction& action() const noexcept { return action_; }
  const BoundarySpace& space() const noexcept { return action_.space(); }

  /// Checked constructors.
  GElem g_make(const FreeGroupElem& t, const BoundaryPath& source) const;
  RDElem rd_make(const BoundaryPath& target, std::size_t k, std::size_t l,
                 const BoundaryPath& source) const;
  GElem g_unit(const BoundaryPath& mu) const { return {mu, FreeGroupElem{}, mu}; }
  RDElem rd_unit(const BoundaryPath& mu) const { return {mu, 0, mu, 0, 0}; }

  /// Throws PreconditionError when source(a) ≠ target(b).
  GElem g_compose(const GElem& a, const GElem& b) const;
  GElem g_inverse(const GElem& g) const;
  RDElem rd_compose(const RDElem& a, const RDElem& b) const;
  RDElem rd_inverse(const RDElem& r) const;

  RDElem theta(const GElem& g) const;
  /// Word-matching inverse of Θ from minimal witnesses.
  GElem theta_inverse(const RDElem& r) const;

  /// {(φ_t(ν), t, ν)}: t of shape αβ⁻¹ with |t| ≤ depth, ν and φ_t(ν) in the pool.
  std::vector<GElem> g_pool(const std::vector<BoundaryPath>& paths, std::size_t depth) const;
  /// {(μ, k − l, ν)}: μ, ν in the pool, k + l ≤ depth.
  std::vector<RDElem> rd_pool(const std::vector<BoundaryPath>& paths, std::size_t depth) const;

  std::string format(const GElem& g) const;
  std::string format(const RDElem& r) const;

  /// Θ on the pools built from paths of depth ≤ depth: well defined,
  /// injective, onto the Renault–Deaconu pool, multiplicative on composable
  /// pairs (all of them, or `samples` random ones when there are more),
  /// unit and inverse preserving, plus the ampleness shadow.
  Report iso_check(std::size_t depth, std::size_t samples, std::uint64_t seed = 0) const;

 private:
  PartialAction action_;
};

}  // namespace gbds
