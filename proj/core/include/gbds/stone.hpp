#pragma once

// Finite Boolean algebras presented by their atoms, together with the
// principal ideals, filters and ultrafilters of such algebras.
//
// A finite Boolean algebra is the powerset of its atoms, so an element is a
// bitmask over at most 64 atoms. Every ideal and every filter in a finite
// algebra is principal; only generators are stored and membership is a
// couple of mask operations.

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbds/error.hpp"

namespace gbds {

using AtomId = std::uint32_t;
inline constexpr std::size_t kMaxAtoms = 64;

class BooleanAlgebra;

/// An element of a finite Boolean algebra: a set of atoms.
class Element {
 public:
  Element() = default;

  std::uint64_t bits() const noexcept { return bits_; }
  std::uint32_t tag() const noexcept { return tag_; }
  bool empty() const noexcept { return bits_ == 0; }
  int count() const noexcept { return std::popcount(bits_); }
  bool contains(AtomId a) const noexcept {
    return a < kMaxAtoms && ((bits_ >> a) & 1U) != 0;
  }
  /// Atoms in increasing index order.
  std::vector<AtomId> atoms() const;
  /// Lowest atom; the element must be nonempty.
  AtomId first_atom() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

 private:
  friend class BooleanAlgebra;
  friend struct Ultrafilter;
  Element(std::uint64_t bits, std::uint32_t tag) : bits_(bits), tag_(tag) {}
  Element with_bits(std::uint64_t bits) const { return {bits, tag_}; }

  friend Element meet(const Element&, const Element&);
  friend Element join(const Element&, const Element&);
  friend Element relative_complement(const Element&, const Element&);

  std::uint64_t bits_ = 0;
  std::uint32_t tag_ = 0;
};

/// Atomwise intersection. Throws StructuralError on mismatched algebras.
Element meet(const Element& a, const Element& b);
/// Atomwise union.
Element join(const Element& a, const Element& b);
/// A \ B.
Element relative_complement(const Element& a, const Element& b);
/// A ⊆ B.
bool leq(const Element& a, const Element& b);

inline Element operator&(const Element& a, const Element& b) { return meet(a, b); }
inline Element operator|(const Element& a, const Element& b) { return join(a, b); }
inline Element operator-(const Element& a, const Element& b) {
  return relative_complement(a, b);
}

/// Finite Boolean algebra given by an ordered list of atom names.
///
/// Copies share the same identity tag, so elements produced by a copy are
/// interchangeable with elements of the original.
class BooleanAlgebra {
 public:
  BooleanAlgebra() : BooleanAlgebra(std::vector<std::string>{}) {}
  explicit BooleanAlgebra(std::vector<std::string> atom_names);

  std::size_t size() const noexcept { return atoms_->size(); }
  const std::vector<std::string>& atom_names() const noexcept { return *atoms_; }
  const std::string& atom_name(AtomId a) const;
  std::optional<AtomId> find_atom(std::string_view name) const;
  AtomId atom_id(std::string_view name) const;  // throws StructuralError
  std::uint32_t tag() const noexcept { return tag_; }

  Element empty() const { return {0, tag_}; }
  Element unit() const { return {unit_bits(), tag_}; }
  Element atom(AtomId a) const;
  Element from_bits(std::uint64_t bits) const;
  Element from_atoms(const std::vector<AtomId>& atoms) const;
  Element from_names(const std::vector<std::string>& names) const;
  /// Every element, in increasing bitmask order. Limited to 20 atoms.
  std::vector<Element> elements() const;
  /// Every element below `bound`, in increasing bitmask order.
  std::vector<Element> elements_below(const Element& bound) const;

  bool owns(const Element& e) const noexcept {
    return e.tag() == tag_ && (e.bits() & ~unit_bits()) == 0;
  }
  void require(const Element& e) const;

  /// "{x,y}" in atom order, "∅" for the empty element.
  std::string format(const Element& e) const;

  friend bool operator==(const BooleanAlgebra& a, const BooleanAlgebra& b) {
    return a.tag_ == b.tag_;
  }

 private:
  std::uint64_t unit_bits() const noexcept {
    return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
  }

  std::shared_ptr<const std::vector<std::string>> atoms_;
  std::uint32_t tag_;
};

/// Principal ideal {B : B ⊆ generator}.
struct Ideal {
  Element generator;

  bool contains(const Element& b) const { return leq(b, generator); }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

/// Principal filter ↑generator inside a context (the algebra's unit or the
/// generator of an ideal).
struct Filter {
  Element generator;
  Element context;

  bool contains(const Element& b) const {
    return leq(generator, b) && leq(b, context);
  }
  friend bool operator==(const Filter&, const Filter&) = default;
};

/// Validated filter constructor: generator nonempty and inside the context.
Filter make_filter(const Element& generator, const Element& context);

/// Ultrafilter of a finite context: all members containing one atom.
struct Ultrafilter {
  AtomId atom = 0;
  Element context;

  bool contains(const Element& b) const {
    return b.contains(atom) && leq(b, context);
  }
  Filter as_filter() const;
  friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;
};

/// One ultrafilter per atom of the algebra.
std::vector<Ultrafilter> ultrafilters(const BooleanAlgebra& algebra);
/// One ultrafilter per atom below the ideal's generator.
std::vector<Ultrafilter> ultrafilters(const BooleanAlgebra& algebra, const Ideal& ideal);

/// Prime filter test. In a finite context a filter is prime exactly when its
/// generator is an atom.
bool is_prime(const Filter& f);

/// Z(A): the ultrafilters of the algebra that contain A.
std::vector<Ultrafilter> stone_set(const BooleanAlgebra& algebra, const Element& a);

}  // namespace gbds
