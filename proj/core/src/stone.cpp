#include "gbds/stone.hpp"

#include <atomic>
#include <set>

namespace gbds {
namespace {

std::uint32_t next_tag() {
  static std::atomic<std::uint32_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

void same_algebra(const Element& a, const Element& b) {
  if (a.tag() != b.tag()) {
    throw StructuralError("elements belong to different Boolean algebras");
  }
}

}  // namespace

std::vector<AtomId> Element::atoms() const {
  std::vector<AtomId> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<AtomId>(std::countr_zero(rest)));
  }
  return out;
}

AtomId Element::first_atom() const {
  if (bits_ == 0) throw PreconditionError("first_atom of the empty element");
  return static_cast<AtomId>(std::countr_zero(bits_));
}

Element meet(const Element& a, const Element& b) {
  same_algebra(a, b);
  return a.with_bits(a.bits_ & b.bits_);
}

Element join(const Element& a, const Element& b) {
  same_algebra(a, b);
  return a.with_bits(a.bits_ | b.bits_);
}

Element relative_complement(const Element& a, const Element& b) {
  same_algebra(a, b);
  return a.with_bits(a.bits_ & ~b.bits_);
}

bool leq(const Element& a, const Element& b) {
  same_algebra(a, b);
  return (a.bits() & ~b.bits()) == 0;
}

BooleanAlgebra::BooleanAlgebra(std::vector<std::string> atom_names)
    : tag_(next_tag()) {
  if (atom_names.size() > kMaxAtoms) {
    throw StructuralError("at most 64 atoms are supported, got " +
                          std::to_string(atom_names.size()));
  }
  std::set<std::string_view> seen;
  for (const auto& name : atom_names) {
    if (name.empty()) throw StructuralError("atom identifiers must be nonempty");
    if (!seen.insert(name).second) {
      throw StructuralError("duplicate atom identifier '" + name + "'");
    }
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atom_names));
}

const std::string& BooleanAlgebra::atom_name(AtomId a) const {
  if (a >= size()) throw StructuralError("atom index out of range");
  return (*atoms_)[a];
}

std::optional<AtomId> BooleanAlgebra::find_atom(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if ((*atoms_)[i] == name) return static_cast<AtomId>(i);
  }
  return std::nullopt;
}

AtomId BooleanAlgebra::atom_id(std::string_view name) const {
  if (auto id = find_atom(name)) return *id;
  throw StructuralError("unknown atom '" + std::string(name) + "'");
}

Element BooleanAlgebra::atom(AtomId a) const {
  if (a >= size()) throw StructuralError("atom index out of range");
  return {std::uint64_t{1} << a, tag_};
}

Element BooleanAlgebra::from_bits(std::uint64_t bits) const {
  if ((bits & ~unit_bits()) != 0) {
    throw StructuralError("bitmask names atoms outside the algebra");
  }
  return {bits, tag_};
}

Element BooleanAlgebra::from_atoms(const std::vector<AtomId>& atoms) const {
  std::uint64_t bits = 0;
  for (AtomId a : atoms) bits |= atom(a).bits();
  return {bits, tag_};
}

Element BooleanAlgebra::from_names(const std::vector<std::string>& names) const {
  std::uint64_t bits = 0;
  for (const auto& n : names) bits |= std::uint64_t{1} << atom_id(n);
  return {bits, tag_};
}

std::vector<Element> BooleanAlgebra::elements() const { return elements_below(unit()); }

std::vector<Element> BooleanAlgebra::elements_below(const Element& bound) const {
  require(bound);
  if (bound.count() > 20) {
    throw UnsupportedInstance("refusing to enumerate more than 2^20 elements");
  }
  // Enumerate submasks of the bound in increasing order.
  std::vector<Element> out;
  out.reserve(std::size_t{1} << bound.count());
  const std::uint64_t full = bound.bits();
  std::uint64_t sub = 0;
  while (true) {
    out.push_back({sub, tag_});
    if (sub == full) break;
    sub = (sub - full) & full;
  }
  return out;
}

void BooleanAlgebra::require(const Element& e) const {
  if (!owns(e)) throw StructuralError("element does not belong to this algebra");
}

std::string BooleanAlgebra::format(const Element& e) const {
  require(e);
  if (e.empty()) return "∅";
  std::string out = "{";
  bool first = true;
  for (AtomId a : e.atoms()) {
    if (!first) out += ',';
    out += (*atoms_)[a];
    first = false;
  }
  out += '}';
  return out;
}

Filter make_filter(const Element& generator, const Element& context) {
  if (generator.empty()) throw PreconditionError("filter generator must be nonempty");
  if (!leq(generator, context)) {
    throw PreconditionError("filter generator lies outside its context");
  }
  return {generator, context};
}

Filter Ultrafilter::as_filter() const {
  return make_filter(context.with_bits(std::uint64_t{1} << atom), context);
}

std::vector<Ultrafilter> ultrafilters(const BooleanAlgebra& algebra) {
  return stone_set(algebra, algebra.unit());
}

std::vector<Ultrafilter> ultrafilters(const BooleanAlgebra& algebra, const Ideal& ideal) {
  algebra.require(ideal.generator);
  std::vector<Ultrafilter> out;
  for (AtomId a : ideal.generator.atoms()) out.push_back({a, ideal.generator});
  return out;
}

bool is_prime(const Filter& f) {
  return f.generator.count() == 1 && leq(f.generator, f.context);
}

std::vector<Ultrafilter> stone_set(const BooleanAlgebra& algebra, const Element& a) {
  algebra.require(a);
  std::vector<Ultrafilter> out;
  for (AtomId x : a.atoms()) out.push_back({x, algebra.unit()});
  return out;
}

}  // namespace gbds
