#pragma once

// Reduced words in the free group on the labels.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbds/word.hpp"

namespace gbds {

class System;

struct Letter {
  LabelId label = 0;
  bool inverse = false;

  Letter inv() const { return {label, !inverse}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class FreeGroupElem {
 public:
  FreeGroupElem() = default;  // identity
  /// Reduces the given letter sequence.
  explicit FreeGroupElem(const std::vector<Letter>& letters);
  /// αβ⁻¹, reduced.
  static FreeGroupElem of(const Word& alpha, const Word& beta = {});

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool is_identity() const noexcept { return letters_.empty(); }
  FreeGroupElem inverse() const;
  friend FreeGroupElem operator*(const FreeGroupElem& s, const FreeGroupElem& t);

  /// (α, β) when the element equals αβ⁻¹ with α, β positive words.
  std::optional<std::pair<Word, Word>> shape() const;
  /// #positive letters − #inverse letters.
  int degree() const;

  /// "ε", "ab⁻¹", "a(bc)⁻¹" for shape αβ⁻¹; letterwise otherwise.
  std::string format(const System& sys) const;
  /// Accepts the format() output and letterwise "x⁻¹" / "x^-1" tokens.
  static FreeGroupElem parse(const System& sys, std::string_view text);

  /// All reduced elements of shape αβ⁻¹ with |α|+|β| ≤ maxlen, α, β ∈ W*.
  static std::vector<FreeGroupElem> shaped(const System& sys, std::size_t maxlen);
  /// All reduced elements of length ≤ maxlen, in shortlex order.
  static std::vector<FreeGroupElem> all(std::size_t labels, std::size_t maxlen);

  friend bool operator==(const FreeGroupElem&, const FreeGroupElem&) = default;
  friend auto operator<=>(const FreeGroupElem&, const FreeGroupElem&) = default;

 private:
  std::vector<Letter> letters_;
};

}  // namespace gbds
