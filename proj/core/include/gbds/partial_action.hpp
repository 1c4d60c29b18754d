#pragma once

// The partial action of the free group on the boundary path space and the
// inverse semigroup of compact-open bisections (t, S), S ⊆ U_{t⁻¹}.

#include <cstdint>
#include <string>

#include "gbds/free_group.hpp"
#include "gbds/paths.hpp"
#include "gbds/report.hpp"

namespace gbds {

struct Bisection {
  FreeGroupElem t;
  OpenSet source;
};

class PartialAction {
 public:
  explicit PartialAction(BoundarySpace space);

  const BoundarySpace& space() const noexcept { return space_; }
  const System& system() const noexcept { return space_.system(); }

  /// U_t: ∂E for t = ε, 𝒩(α, I_α ∩ I_β) for t = αβ⁻¹, ∅ otherwise.
  OpenSet domain_of(const FreeGroupElem& t) const;
  bool in_domain(const FreeGroupElem& t, const BoundaryPath& mu) const;
  /// φ_t(μ). Throws DomainError unless μ ∈ U_{t⁻¹}.
  BoundaryPath act(const FreeGroupElem& t, const BoundaryPath& mu) const;
  /// φ_t(S). Throws PreconditionError unless S ⊆ U_{t⁻¹}.
  OpenSet act_on_openset(const FreeGroupElem& t, const OpenSet& s) const;

  Bisection bisection(const FreeGroupElem& t, const OpenSet& source) const;
  Bisection mul(const Bisection& a, const Bisection& b) const;
  Bisection star(const Bisection& b) const;
  OpenSet range(const Bisection& b) const;
  /// Equal as sets of groupoid elements; all empty bisections are equal.
  bool equal(const Bisection& a, const Bisection& b) const;
  /// P_A = (ε, 𝒩(ε, A)).
  Bisection projection(const Element& a) const;
  /// S_{α,B} = (α, 𝒩(ε, B)), B ∈ I_α.
  Bisection partial_isometry(const Word& alpha, const Element& b) const;
  std::string format(const Bisection& b) const;

  /// Partial-action axioms, semi-saturation, orthogonality and composite
  /// domains for all reduced t, s with |t|, |s| ≤ depth; pointwise checks on
  /// paths of depth ≤ depth, with `samples` random triples for composition.
  Report check_axioms(std::size_t depth, std::size_t samples, std::uint64_t seed = 0) const;
  /// Representation relations (i)–(iv) with |α| ≤ maxlen for (ii)'s words.
  Report ck_check(std::size_t maxlen = 3) const;
  /// Factorization identities of bisections for α, β ∈ W*, |α|, |β| ≤ maxlen.
  Report factorization_check(std::size_t maxlen) const;

 private:
  BoundarySpace space_;
};

}  // namespace gbds
