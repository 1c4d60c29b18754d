#pragma once

// Degrees of bisections, invariant open subsets of ∂E, and the system
// induced on an invariant open set.

#include <optional>
#include <string>
#include <vector>

#include "gbds/partial_action.hpp"

namespace gbds {

/// |α| − |β| for a bisection at αβ⁻¹.
int grading_degree(const Bisection& b);

struct InvariantOpenSet {
  OpenSet carrier;
  std::size_t depth = 0;  // depth at which invariance was verified
};

struct InvarianceResult {
  std::optional<InvariantOpenSet> certified;
  /// On failure: the generator (α or α⁻¹) and one atomic cell of
  /// φ(S ∩ U) \ S.
  std::string generator;
  OpenSet witness;

  bool invariant() const noexcept { return certified.has_value(); }
};

/// Exact checks φ_{α⁻¹}(S ∩ U_α) ⊆ S and φ_α(S ∩ U_{α⁻¹}) ⊆ S for every label.
InvarianceResult check_invariance(const PartialAction& pa, const OpenSet& s, std::size_t depth);
/// φ_t(S ∩ U_{t⁻¹}) ⊆ S for every reduced t with |t| ≤ maxlen.
bool invariant_under_words(const PartialAction& pa, const OpenSet& s, std::size_t maxlen);

/// The system induced on an invariant open set U: θ^J_α(A) = φ_{α⁻¹}(A ∩ U_α ∩ U)
/// on compact-open A ⊆ U. Queries finer than the certificate depth throw
/// DepthExceeded.
class LazyBDS {
 public:
  LazyBDS(PartialAction pa, InvariantOpenSet base);

  const InvariantOpenSet& base() const noexcept { return base_; }
  std::size_t depth() const noexcept { return base_.depth; }
  const PartialAction& action() const noexcept { return pa_; }

  /// Atomic cells of U at the certificate depth.
  std::vector<OpenSet> atoms() const;
  OpenSet theta(LabelId label, const OpenSet& a) const;
  std::vector<LabelId> delta(const OpenSet& a) const;
  /// Regular iff every nonempty compact-open B ⊆ A meets some U_α, i.e. A
  /// holds no vertex path.
  bool is_regular(const OpenSet& a) const;
  /// θ^J_α preserves ∩, ∪ and \ on all pairs of atomic cells.
  Report check_homomorphism() const;

 private:
  void require_depth(const OpenSet& a) const;

  PartialAction pa_;
  InvariantOpenSet base_;
};

LazyBDS restrict(const PartialAction& pa, const InvariantOpenSet& u);

}  // namespace gbds
