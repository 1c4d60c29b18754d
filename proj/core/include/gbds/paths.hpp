#pragma once

// The topological correspondence of a system and its boundary path space.
//
// Ultrafilters of the finite algebras involved are principal at a single
// atom, so vertices and edge labels are stored as atoms:
//   vertex ↑a        ->  AtomId a
//   edge e^α_η       ->  Edge{α, c} where η is the ultrafilter of I_α at c
// With valid actions, d(e^α_c) = ↑c and r(e^α_c) = ↑pre_α(c), or the empty
// marker when c has no preimage.
//
// Infinite paths are materialized only when eventually periodic (lassos).
// Compact-open sets use a normal form of atomic cells at a common depth d:
//   (w, c), |w| = d    the cylinder 𝒩(w, {c});
//   (w, c), |w| < d    the single finite path with word w ending at the
//                      singular atom c (a vertex path when w = ε).
// Every valid cell is nonempty and distinct cells are disjoint, so equal
// sets have equal cell lists once refined to the same depth.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbds/semigroup.hpp"
#include "gbds/system.hpp"

namespace gbds {

struct Edge {
  LabelId label = 0;
  AtomId atom = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class BoundaryPath {
 public:
  enum class Kind { Vertex, Finite, Lasso };

  BoundaryPath() = default;
  static BoundaryPath vertex(AtomId v);
  static BoundaryPath finite(std::vector<Edge> edges);
  /// Canonical form: primitive cycle, prefix rolled into the cycle.
  static BoundaryPath lasso(std::vector<Edge> prefix, std::vector<Edge> cycle);

  Kind kind() const noexcept { return kind_; }
  bool is_vertex() const noexcept { return kind_ == Kind::Vertex; }
  bool is_lasso() const noexcept { return kind_ == Kind::Lasso; }
  bool infinite() const noexcept { return kind_ == Kind::Lasso; }
  /// Number of edges of a finite path; lassos report SIZE_MAX.
  std::size_t length() const noexcept;
  AtomId vertex_atom() const;
  /// Edges of a finite path, or the prefix of a lasso.
  const std::vector<Edge>& stem() const noexcept { return stem_; }
  const std::vector<Edge>& cycle() const noexcept { return cycle_; }

  bool has_edge(std::size_t i) const noexcept { return i >= 1 && i <= length(); }
  /// 1-based edge access, periodic for lassos.
  const Edge& edge(std::size_t i) const;
  /// 𝒫(μ)_{1,n}.
  Word word(std::size_t n) const;
  /// Terminal atom of a finite path (the vertex for a vertex path).
  AtomId terminal() const;
  /// Removes the first k edges. Removing every edge of a finite path leaves
  /// the vertex path at its terminal atom.
  BoundaryPath drop(std::size_t k) const;
  /// Concatenation e_1⋯e_n μ (no validity check).
  BoundaryPath prepend(const std::vector<Edge>& edges) const;

  friend bool operator==(const BoundaryPath&, const BoundaryPath&) = default;
  friend auto operator<=>(const BoundaryPath&, const BoundaryPath&) = default;

 private:
  Kind kind_ = Kind::Vertex;
  AtomId vertex_ = 0;
  std::vector<Edge> stem_;
  std::vector<Edge> cycle_;
};

/// Deterministic display order: vertex and finite paths by length, then lassos.
bool path_display_less(const BoundaryPath& a, const BoundaryPath& b);

struct EdgeInfo {
  Edge edge;
  AtomId d = 0;
  std::optional<AtomId> r;  // nullopt is the empty-range marker
};

struct Correspondence {
  std::vector<AtomId> vertices;
  std::vector<EdgeInfo> edges;  // label order, then atom order
};

struct CellKey {
  Word word;
  AtomId atom = 0;

  friend bool operator==(const CellKey&, const CellKey&) = default;
  friend auto operator<=>(const CellKey&, const CellKey&) = default;
};

struct OpenSet {
  std::size_t depth = 0;
  std::vector<CellKey> cells;  // sorted, unique

  bool empty() const noexcept { return cells.empty(); }
};

class BoundarySpace {
 public:
  /// Requires a valid system.
  explicit BoundarySpace(System sys);

  const System& system() const noexcept { return sys_; }
  const Semigroup& semigroup() const noexcept { return sg_; }
  const Correspondence& correspondence() const noexcept { return corr_; }

  // Correspondence -----------------------------------------------------
  bool is_edge(const Edge& e) const;
  AtomId d(const Edge& e) const;
  std::optional<AtomId> r(const Edge& e) const;
  /// E⁰_sg: vertices outside the closure of r(E¹) (discrete here).
  std::vector<AtomId> singular_vertices() const;

  /// f_{α[β]}(η) for η ∈ X_{αβ} given by its atom. Empty marker only for α = ε.
  std::optional<AtomId> dual_f(const Word& alpha, const Word& beta, AtomId eta) const;
  /// g_{(α)β}(𝓕) = 𝓕 ∩ I_{αβ}. Throws PreconditionError when empty.
  AtomId restrict_g(const Word& alpha, const Word& beta, AtomId f) const;
  /// h_{[α]β}(𝓕) = ↑_{I_β} 𝓕.
  AtomId upclose_h(const Word& alpha, const Word& beta, AtomId f) const;

  // Paths ---------------------------------------------------------------
  bool is_boundary_path(const BoundaryPath& mu, std::string* why = nullptr) const;
  void require_path(const BoundaryPath& mu) const;
  /// r(μ); the vertex itself for a vertex path.
  std::optional<AtomId> range_of_path(const BoundaryPath& mu) const;
  /// σ. Throws PreconditionError on vertex paths.
  BoundaryPath shift(const BoundaryPath& mu) const;
  /// μ ∈ 𝒩(α, A).
  bool cylinder_member(const BoundaryPath& mu, const Word& alpha, const Element& a) const;

  /// Finite boundary paths with at most maxlen edges (vertex paths included).
  std::vector<BoundaryPath> finite_paths(std::size_t maxlen) const;
  /// Lassos with |prefix| + |cycle| ≤ maxtotal and |cycle| ≤ maxperiod.
  std::vector<BoundaryPath> lassos(std::size_t maxtotal, std::size_t maxperiod) const;
  /// finite_paths(depth) followed by lassos(depth, depth).
  std::vector<BoundaryPath> paths(std::size_t depth) const;
  /// ∂E is finite exactly when every atom on a cycle has one outgoing edge.
  bool boundary_is_finite() const;
  /// All of ∂E. Throws UnsupportedInstance when it is infinite.
  std::vector<BoundaryPath> exact_boundary() const;

  FilterE boundary_to_tight(const BoundaryPath& mu) const;
  BoundaryPath tight_to_boundary(const FilterE& xi) const;

  std::string format(const BoundaryPath& mu) const;
  BoundaryPath parse_path(std::string_view spec) const;
  std::string format_vertex(AtomId v) const;

  // Compact-open sets -----------------------------------------------------
  /// Smallest depth at which ∂E itself has a normal form.
  std::size_t min_universe_depth() const noexcept { return min_depth_; }
  OpenSet empty_set() const { return {}; }
  OpenSet universe(std::size_t depth = 0) const;
  /// 𝒩(α, A); requires A ∈ I_α.
  OpenSet cylinder(const Word& alpha, const Element& a) const;
  /// Normalizes arbitrary cells; throws PreconditionError on invalid cells.
  OpenSet make(std::size_t depth, std::vector<CellKey> cells) const;
  OpenSet refine(const OpenSet& s, std::size_t depth) const;
  OpenSet unite(const OpenSet& a, const OpenSet& b) const;
  OpenSet intersect(const OpenSet& a, const OpenSet& b) const;
  OpenSet subtract(const OpenSet& a, const OpenSet& b) const;
  OpenSet complement(const OpenSet& a) const;
  bool equal(const OpenSet& a, const OpenSet& b) const;
  bool subset(const OpenSet& a, const OpenSet& b) const;
  bool is_empty(const OpenSet& s) const { return s.cells.empty(); }
  bool contains(const OpenSet& s, const BoundaryPath& mu) const;
  /// Lemma-style closed form for 𝒩(α,A) ∩ 𝒩(β,B).
  OpenSet cylinder_intersect(const Word& alpha, const Element& a, const Word& beta,
                             const Element& b) const;
  /// Graph-search nonemptiness of one cell: a singular atom or a cycle is
  /// reachable from its atom.
  bool cell_nonempty(const CellKey& cell, std::size_t depth) const;
  bool valid_cell(const CellKey& cell, std::size_t depth) const;
  std::string format(const OpenSet& s) const;
  /// Union of terms separated by "∪": "N(w,{atoms})", "{pathspec}" for an
  /// isolated finite path, "∂E" or "all", "∅" or "empty".
  OpenSet parse_openset(std::string_view text) const;

  // Checks ------------------------------------------------------------------
  /// Family round trip on every filter of finite type with |α| ≤ maxlen and on
  /// lasso filters, and agreement of the tight predicate with boundary paths.
  Report check_tight(std::size_t maxlen, std::size_t maxperiod) const;
  /// Cylinders 𝒩(α, A) with |α| ≤ cyl_len and every nonempty A ∈ I_α against
  /// pointwise membership over paths(depth). Set operations are checked on
  /// every pair when there are at most max_pairs, otherwise on a seeded sample.
  Report check_cylinders(std::size_t depth, std::size_t cyl_len = 2, std::size_t max_pairs = 4000,
                         std::uint64_t seed = 0) const;

 private:
  std::vector<CellKey> children(const CellKey& cell, std::size_t depth) const;
  CellKey cell_of(const BoundaryPath& mu, std::size_t depth, bool& ok) const;

  System sys_;
  Semigroup sg_;
  Correspondence corr_;
  std::size_t min_depth_ = 0;
};

}  // namespace gbds
