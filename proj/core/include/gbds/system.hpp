#pragma once

// Generalized Boolean dynamical systems over a finite Boolean algebra.
//
// Each label carries an action θ given by atom images, and a principal ideal
// I generated by one element. An action is valid when images of distinct
// atoms are disjoint; it then extends to a Boolean homomorphism by unions and
// has a partial inverse on atoms, `pre`.

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gbds/report.hpp"
#include "gbds/stone.hpp"
#include "gbds/word.hpp"

namespace gbds {

struct Action {
  std::string label;
  std::vector<Element> atom_image;  // indexed by AtomId
};

class System {
 public:
  /// `ideal_gens` may be empty, in which case I_α = R_α for every label.
  /// Structural problems (sizes, names, foreign elements) throw; semantic
  /// problems (overlapping images, R_α ⊄ I_α) are reported by validate().
  System(BooleanAlgebra algebra, std::vector<Action> actions,
         std::vector<Element> ideal_gens = {});

  const BooleanAlgebra& algebra() const noexcept { return algebra_; }
  std::size_t atom_count() const noexcept { return algebra_.size(); }
  std::size_t label_count() const noexcept { return actions_.size(); }
  const std::string& label_name(LabelId l) const;
  std::optional<LabelId> find_label(std::string_view name) const;
  LabelId label_id(std::string_view name) const;  // throws StructuralError
  const Action& action(LabelId l) const;
  const Element& ideal_gen(LabelId l) const;

  Element apply(LabelId l, const Element& a) const;
  /// θ_α = θ_{α_n} ∘ ⋯ ∘ θ_{α_1}; identity for ε.
  Element apply_word(const Word& w, const Element& a) const;
  /// Δ_A: labels whose action does not kill A, in label order.
  std::vector<LabelId> delta(const Element& a) const;
  std::size_t lambda(const Element& a) const { return delta(a).size(); }
  /// Every atom below A has nonempty Δ. True for ∅.
  bool is_regular(const Element& a) const;
  Ideal range_ideal(LabelId l) const;
  /// Generator of I_α: the unit for ε, else θ_{α_2⋯α_n}(gen I_{α_1}).
  Element word_gen(const Word& w) const;
  Ideal word_ideal(const Word& w) const { return Ideal{word_gen(w)}; }
  /// Words of length ≤ maxlen with nonzero ideal, shortlex order.
  std::vector<Word> wstar(std::size_t maxlen) const;
  bool in_wstar(const Word& w) const { return !word_gen(w).empty(); }

  Report validate() const;
  bool is_valid() const noexcept { return valid_; }
  /// Throws PreconditionError naming the first violation unless valid.
  void require_valid() const;

  /// The unique atom a with c ∈ θ_l(a), if any.
  std::optional<AtomId> pre(LabelId l, AtomId c) const;
  /// Union of preimages of the atoms of g (atoms without one are skipped).
  Element pre_image(LabelId l, const Element& g) const;
  /// Every atom of g has a preimage under θ_l.
  bool has_full_pre(LabelId l, const Element& g) const;
  /// Atom a with Δ_{a} = ∅.
  bool is_singular_atom(AtomId a) const;
  Element singular_atoms() const;
  /// Some label has an atom in I_α without a preimage.
  bool has_empty_range_edges() const;

  /// "ε", "ab", or "ab.cd" when some label name is longer than one character.
  std::string format_word(const Word& w) const;
  /// Inverse of format_word; also accepts greedy longest-match concatenation.
  Word parse_word(std::string_view text) const;
  std::string format(const Element& e) const { return algebra_.format(e); }

 private:
  BooleanAlgebra algebra_;
  std::vector<Action> actions_;
  std::vector<Element> ideal_gens_;
  std::vector<std::vector<int>> pre_;  // pre_[label][atom], -1 if none
  bool dotted_ = false;
  bool valid_ = false;
};

/// A valid system with 1..max_atoms atoms "p0", "p1", … and 1..max_labels
/// labels "a", "b", …. Each atom picks its θ_l-preimage uniformly among
/// "none" and the atoms; I_l is R_l plus a uniform random subset of atoms.
System random_system(std::mt19937_64& rng, std::size_t max_atoms = 4, std::size_t max_labels = 3);

}  // namespace gbds
