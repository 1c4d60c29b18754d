#include "gbds/ideal_shadow.hpp"

namespace gbds {

int grading_degree(const Bisection& b) {
  if (!b.t.is_identity() && !b.t.shape()) throw PreconditionError("degree needs t of shape αβ⁻¹");
  return b.t.degree();
}

InvarianceResult check_invariance(const PartialAction& pa, const OpenSet& s, std::size_t depth) {
  const BoundarySpace& sp = pa.space();
  const System& sys = pa.system();
  InvarianceResult res;
  for (LabelId l = 0; l < sys.label_count(); ++l) {
    const FreeGroupElem a = FreeGroupElem::of(Word::single(l));
    for (const FreeGroupElem& g : {a, a.inverse()}) {
      OpenSet part = sp.intersect(s, pa.domain_of(g.inverse()));
      OpenSet image = pa.act_on_openset(g, part);
      OpenSet extra = sp.subtract(image, s);
      if (extra.empty()) continue;
      extra = sp.refine(extra, std::max(extra.depth, depth));
      res.generator = g.format(sys);
      res.witness = OpenSet{extra.depth, {extra.cells.front()}};
      return res;
    }
  }
  res.certified = InvariantOpenSet{s, std::max(s.depth, depth)};
  return res;
}

bool invariant_under_words(const PartialAction& pa, const OpenSet& s, std::size_t maxlen) {
  const BoundarySpace& sp = pa.space();
  for (const auto& t : FreeGroupElem::all(pa.system().label_count(), maxlen)) {
    OpenSet part = sp.intersect(s, pa.domain_of(t.inverse()));
    if (!sp.subset(pa.act_on_openset(t, part), s)) return false;
  }
  return true;
}

LazyBDS::LazyBDS(PartialAction pa, InvariantOpenSet base) : pa_(std::move(pa)), base_(std::move(base)) {
  if (base_.carrier.depth > base_.depth) throw PreconditionError("certificate is coarser than its carrier");
}

LazyBDS restrict(const PartialAction& pa, const InvariantOpenSet& u) { return LazyBDS(pa, u); }

void LazyBDS::require_depth(const OpenSet& a) const {
  if (a.depth > base_.depth) {
    throw DepthExceeded("query at depth " + std::to_string(a.depth) + " exceeds the certificate depth " +
                        std::to_string(base_.depth) + "; recertify at a larger depth");
  }
  if (!pa_.space().subset(a, base_.carrier)) throw PreconditionError("set is not contained in U");
}

std::vector<OpenSet> LazyBDS::atoms() const {
  OpenSet u = pa_.space().refine(base_.carrier, base_.depth);
  std::vector<OpenSet> out;
  for (const auto& c : u.cells) out.push_back({u.depth, {c}});
  return out;
}

OpenSet LazyBDS::theta(LabelId label, const OpenSet& a) const {
  require_depth(a);
  const BoundarySpace& sp = pa_.space();
  const FreeGroupElem g = FreeGroupElem::of(Word::single(label));
  OpenSet part = sp.intersect(sp.intersect(a, pa_.domain_of(g)), base_.carrier);
  return pa_.act_on_openset(g.inverse(), part);
}

std::vector<LabelId> LazyBDS::delta(const OpenSet& a) const {
  std::vector<LabelId> out;
  for (LabelId l = 0; l < pa_.system().label_count(); ++l) {
    if (!theta(l, a).empty()) out.push_back(l);
  }
  return out;
}

bool LazyBDS::is_regular(const OpenSet& a) const {
  require_depth(a);
  if (a.empty()) return false;
  const OpenSet r = pa_.space().refine(a, std::max<std::size_t>(a.depth, 1));
  for (const auto& c : r.cells) {
    if (c.word.empty()) return false;
  }
  return true;
}

Report LazyBDS::check_homomorphism() const {
  const BoundarySpace& sp = pa_.space();
  const System& sys = pa_.system();
  Report rep("induced action on U (depth " + std::to_string(base_.depth) + ")");
  const auto cells = atoms();
  rep.fact("atomic cells", std::to_string(cells.size()));
  Tally hom("θ^J_α preserves ∩, ∪, \\");
  for (LabelId l = 0; l < sys.label_count(); ++l) {
    for (const auto& a : cells) {
      for (const auto& b : cells) {
        const OpenSet ta = theta(l, a), tb = theta(l, b);
        bool ok = sp.equal(theta(l, sp.intersect(a, b)), sp.intersect(ta, tb)) &&
                  sp.equal(theta(l, sp.unite(a, b)), sp.unite(ta, tb)) &&
                  sp.equal(theta(l, sp.subtract(a, b)), sp.subtract(ta, tb));
        hom.add(ok, [&] { return sys.label_name(l) + " on " + sp.format(a) + ", " + sp.format(b); });
      }
    }
  }
  hom.emit(rep);
  return rep;
}

}  // namespace gbds
