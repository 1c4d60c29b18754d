#pragma once

// The inverse semigroup S of a system: triples (α, A, β) with A ≠ ∅ in
// I_α ∩ I_β, plus zero. Filters in its idempotent semilattice are stored as
// complete families of principal generators, one per prefix of the word.

#include <optional>
#include <string>
#include <vector>

#include "gbds/system.hpp"

namespace gbds {

struct SgElem {
  bool zero = true;
  Word alpha;
  Element set;
  Word beta;

  static SgElem Zero() { return {}; }
  bool is_zero() const noexcept { return zero; }
  bool is_idempotent() const noexcept { return zero || alpha == beta; }

  friend bool operator==(const SgElem&, const SgElem&) = default;
  friend auto operator<=>(const SgElem&, const SgElem&) = default;
};

/// A filter in E(S): a finite word, or a lasso word prefix·cycle^∞, with
/// generators G_0..G_N of the complete family F_n = ↑G_n.
///
/// For a finite word N = |word|. For a lasso N = |word| + |cycle| and the
/// generators repeat with period |cycle| from index |word|+1 on. An empty
/// G_0 encodes F_0 = ∅.
struct FilterE {
  Word word;
  Word cycle;
  std::vector<Element> family;

  bool infinite() const noexcept { return !cycle.empty(); }
  /// Letter at 1-based position n of the (possibly infinite) word.
  LabelId letter(std::size_t n) const;
  /// Generator of F_n for any n ≥ 0 (periodic extension for lassos).
  const Element& generator(std::size_t n) const;

  friend bool operator==(const FilterE&, const FilterE&) = default;
  friend auto operator<=>(const FilterE&, const FilterE&) = default;
};

class Semigroup {
 public:
  explicit Semigroup(System sys);

  const System& system() const noexcept { return sys_; }

  /// Checked constructor: A ≠ ∅, A ∈ I_α ∩ I_β.
  SgElem make(const Word& alpha, const Element& a, const Word& beta) const;
  SgElem multiply(const SgElem& s, const SgElem& t) const;
  static SgElem star(const SgElem& s);
  /// Natural order on idempotents. Throws StructuralError otherwise.
  bool idempotent_leq(const SgElem& e, const SgElem& f) const;
  /// Every nonzero element with α, β ∈ W* of length ≤ maxlen.
  std::vector<SgElem> enumerate(std::size_t maxlen) const;
  std::string format(const SgElem& s) const;
  /// Associativity, s·s*·s = s, s*·s·s* = s* and commuting idempotents on
  /// every triple of enumerate(maxlen), plus closure of products under the
  /// element invariants.
  Report check_laws(std::size_t maxlen) const;

  /// Validates completeness and returns the filter in canonical form.
  /// Throws ValidationError carrying the first failing index.
  FilterE filter_from_family(const Word& word, const Word& cycle,
                             std::vector<Element> family) const;
  FilterE filter_from_family(const Word& word, std::vector<Element> family) const {
    return filter_from_family(word, Word{}, std::move(family));
  }
  /// Recovers the word data and the family ξ_n = {A : (α_{1,n}, A, α_{1,n}) ∈ ξ}
  /// from the membership predicate.
  FilterE family_from_filter(const FilterE& xi) const;
  /// (β, A, β) ∈ ξ.
  bool member(const FilterE& xi, const SgElem& e) const;
  bool is_tight(const FilterE& xi) const;
  /// Every filter of finite type with |α| ≤ maxlen (all nonempty top generators).
  std::vector<FilterE> finite_filters(std::size_t maxlen) const;
  /// Tight filters: finite type with |α| ≤ maxlen, lassos with prefix ≤ maxlen
  /// and period ≤ maxperiod. Finite type first, each group in canonical order.
  std::vector<FilterE> tight_filters(std::size_t maxlen, std::size_t maxperiod) const;
  std::string format(const FilterE& xi) const;

 private:
  FilterE canonical(FilterE xi) const;
  System sys_;
};

}  // namespace gbds
