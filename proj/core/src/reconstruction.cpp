#include "gbds/reconstruction.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "gbds/free_group.hpp"
#include "gbds/partial_action.hpp"

namespace gbds {

namespace {

constexpr long kNone = -1;

// ρ_α and ρ_α⁻¹ as lookup tables.
struct Maps {
  std::vector<std::vector<long>> fwd;  // fwd[g][x] = ρ_g(x) for x ∈ V_{g⁻¹}
  std::vector<std::vector<long>> bwd;  // bwd[g][y] = ρ_g⁻¹(y) for y ∈ V_g
};

std::string point_name(const FinitePartialAction& a, PointId p) {
  return p < a.points.size() ? a.points[p] : "#" + std::to_string(p);
}

// Structural checks; returns the tables when every ρ_α is a bijection
// V_{α⁻¹} → V_α.
std::optional<Maps> build_maps(const FinitePartialAction& a, Report* rep) {
  const std::size_t n = a.points.size();
  Maps m;
  bool ok = true;
  Tally names("points and labels are distinct");
  std::set<std::string> seen_points(a.points.begin(), a.points.end());
  names.add(seen_points.size() == n, [] { return "duplicate point name"; });
  std::set<std::string> seen_labels;
  for (const auto& g : a.generators) {
    names.add(!g.label.empty() && seen_labels.insert(g.label).second,
              [&] { return "duplicate or empty label '" + g.label + "'"; });
  }
  Tally bij("ρ_α is a bijection V_{α⁻¹} → V_α");
  for (const auto& g : a.generators) {
    std::vector<long> fwd(n, kNone), bwd(n, kNone);
    std::string why;
    auto in_range = [&](const std::vector<PointId>& v) {
      return std::all_of(v.begin(), v.end(), [&](PointId p) { return p < n; });
    };
    if (!in_range(g.V) || !in_range(g.V_inv)) why = "unknown point";
    std::set<PointId> V(g.V.begin(), g.V.end()), Vi(g.V_inv.begin(), g.V_inv.end());
    for (const auto& [from, to] : g.rho) {
      if (!why.empty()) break;
      if (!Vi.count(from)) {
        why = point_name(a, from) + " ∉ V_" + g.label + "⁻¹";
      } else if (!V.count(to)) {
        why = point_name(a, to) + " ∉ V_" + g.label;
      } else if (fwd[from] != kNone) {
        why = "ρ_" + g.label + " assigns " + point_name(a, from) + " twice";
      } else if (bwd[to] != kNone) {
        why = "ρ_" + g.label + " is not injective at " + point_name(a, to);
      } else {
        fwd[from] = static_cast<long>(to);
        bwd[to] = static_cast<long>(from);
      }
    }
    if (why.empty()) {
      for (PointId p : Vi) {
        if (fwd[p] == kNone) {
          why = "ρ_" + g.label + " is undefined at " + point_name(a, p);
          break;
        }
      }
    }
    if (why.empty()) {
      for (PointId p : V) {
        if (bwd[p] == kNone) {
          why = "ρ_" + g.label + " misses " + point_name(a, p);
          break;
        }
      }
    }
    bij.add(why.empty(), [&] { return why; });
    ok = ok && why.empty();
    m.fwd.push_back(std::move(fwd));
    m.bwd.push_back(std::move(bwd));
  }
  ok = ok && names.ok();
  if (rep) {
    names.emit(*rep);
    bij.emit(*rep);
  }
  if (!ok) return std::nullopt;
  return m;
}

// φ_t(x) for a reduced word t, applied right to left.
std::optional<PointId> apply_group(const Maps& m, const FreeGroupElem& t, PointId x) {
  long cur = static_cast<long>(x);
  const auto& ls = t.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    const auto& table = it->inverse ? m.bwd[it->label] : m.fwd[it->label];
    cur = table[static_cast<std::size_t>(cur)];
    if (cur == kNone) return std::nullopt;
  }
  return static_cast<PointId>(cur);
}

bool orthogonal(const FinitePartialAction& a, Report* rep) {
  Tally orth("orthogonality: V_α ∩ V_β = ∅ for distinct generators");
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < a.generators.size(); ++j) {
      const auto& gi = a.generators[i];
      const auto& gj = a.generators[j];
      std::vector<PointId> both;
      std::set<PointId> vi(gi.V.begin(), gi.V.end());
      for (PointId p : gj.V) {
        if (vi.count(p)) both.push_back(p);
      }
      orth.add(both.empty(), [&] {
        return "V_" + gi.label + " ∩ V_" + gj.label + " ∋ " + point_name(a, both.front());
      });
    }
  }
  if (rep) orth.emit(*rep);
  return orth.ok();
}

Maps require_maps(const FinitePartialAction& a) {
  Report r;
  auto m = build_maps(a, &r);
  if (!m || !orthogonal(a, &r)) {
    const ReportEntry* bad = r.first_failure();
    throw PreconditionError("invalid partial action: " + (bad ? bad->value : std::string("?")));
  }
  return *m;
}

}  // namespace

Report validate_action(const FinitePartialAction& a, std::size_t maxlen) {
  Report rep("partial action on " + std::to_string(a.points.size()) + " points");
  auto m = build_maps(a, &rep);
  orthogonal(a, &rep);
  if (!m) {
    rep.check("partial-action axioms", false, "skipped: some ρ_α is not a bijection");
    return rep;
  }
  const auto group = FreeGroupElem::all(a.generators.size(), maxlen);
  const std::size_t n = a.points.size();
  // V_t as the image of φ_t.
  std::map<FreeGroupElem, std::vector<bool>> cache;
  auto V = [&](const FreeGroupElem& t) -> const std::vector<bool>& {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    std::vector<bool> img(n, false);
    for (PointId x = 0; x < n; ++x) {
      if (auto y = apply_group(*m, t, x)) img[*y] = true;
    }
    return cache.emplace(t, std::move(img)).first->second;
  };
  Tally ax2("axiom (2): φ_t(V_{t⁻¹} ∩ V_s) = V_t ∩ V_{ts}");
  Tally ax3("axiom (3): φ_sφ_t(x) = φ_{st}(x) on V_{t⁻¹} ∩ V_{(st)⁻¹}");
  for (const auto& t : group) {
    const auto& vti = V(t.inverse());
    const auto& vt = V(t);
    for (const auto& s : group) {
      const auto& vs = V(s);
      const auto& vts = V(t * s);
      std::vector<bool> lhs(n, false), rhs(n, false);
      for (PointId x = 0; x < n; ++x) {
        if (vti[x] && vs[x]) lhs[*apply_group(*m, t, x)] = true;
        rhs[x] = vt[x] && vts[x];
      }
      ax2.add(lhs == rhs, [&] {
        return "t=" + std::to_string(t.length()) + " letters, s=" + std::to_string(s.length()) + " letters";
      });
      const FreeGroupElem st = s * t;
      const auto& vsti = V(st.inverse());
      for (PointId x = 0; x < n; ++x) {
        if (!vti[x] || !vsti[x]) continue;
        auto y = apply_group(*m, t, x);
        auto lhs3 = y ? apply_group(*m, s, *y) : std::nullopt;
        auto rhs3 = apply_group(*m, st, x);
        ax3.add(lhs3 && lhs3 == rhs3, [&] { return "at " + point_name(a, x); });
      }
    }
  }
  ax2.emit(rep);
  ax3.emit(rep);
  return rep;
}

System derive_bds(const FinitePartialAction& a) {
  const Maps m = require_maps(a);
  BooleanAlgebra alg(a.points);
  std::vector<Action> actions;
  std::vector<Element> ideals;
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    Action act{a.generators[g].label, std::vector<Element>(a.points.size(), alg.empty())};
    for (PointId x = 0; x < a.points.size(); ++x) {
      if (m.bwd[g][x] != kNone) act.atom_image[x] = alg.atom(static_cast<AtomId>(m.bwd[g][x]));
    }
    std::vector<AtomId> vinv(a.generators[g].V_inv.begin(), a.generators[g].V_inv.end());
    ideals.push_back(alg.from_atoms(vinv));
    actions.push_back(std::move(act));
  }
  return System(alg, std::move(actions), std::move(ideals));
}

Itinerary itinerary(const FinitePartialAction& a, PointId x) {
  const Maps m = require_maps(a);
  if (x >= a.points.size()) throw PreconditionError("unknown point");
  Itinerary it;
  std::vector<LabelId> letters;
  std::map<PointId, std::size_t> index;
  PointId cur = x;
  for (;;) {
    index[cur] = it.points.size();
    it.points.push_back(cur);
    std::optional<LabelId> g;
    for (LabelId l = 0; l < a.generators.size(); ++l) {
      if (m.bwd[l][cur] != kNone) g = l;
    }
    if (!g) break;
    const PointId next = static_cast<PointId>(m.bwd[*g][cur]);
    letters.push_back(*g);
    auto seen = index.find(next);
    if (seen != index.end()) {
      const std::size_t j = seen->second;
      for (std::size_t i = 0; i < j; ++i) it.word.push_back(letters[i]);
      for (std::size_t i = j; i < letters.size(); ++i) it.cycle.push_back(letters[i]);
      return it;
    }
    cur = next;
  }
  for (LabelId l : letters) it.word.push_back(l);
  return it;
}

BoundaryPath conjugacy_map(const FinitePartialAction& a, PointId x) {
  const Itinerary it = itinerary(a, x);
  if (!it.lasso() && it.word.empty()) return BoundaryPath::vertex(static_cast<AtomId>(x));
  std::vector<Edge> prefix, cycle;
  for (std::size_t i = 1; i <= it.word.size(); ++i) {
    prefix.push_back({it.word[i - 1], static_cast<AtomId>(it.points[i])});
  }
  if (!it.lasso()) return BoundaryPath::finite(std::move(prefix));
  const std::size_t p = it.word.size();
  for (std::size_t i = 0; i < it.cycle.size(); ++i) {
    // x_{p+c} closes the cycle at x_p.
    const PointId pt = p + 1 + i < it.points.size() ? it.points[p + 1 + i] : it.points[p];
    cycle.push_back({it.cycle[i], static_cast<AtomId>(pt)});
  }
  return BoundaryPath::lasso(std::move(prefix), std::move(cycle));
}

Report verify_conjugacy(const FinitePartialAction& a, const System& derived,
                        const std::vector<BoundaryPath>& f, std::size_t maxlen) {
  Report rep("conjugacy X → ∂E");
  const std::size_t n = a.points.size();
  auto m = build_maps(a, nullptr);
  if (!m || !orthogonal(a, nullptr) || f.size() != n || derived.label_count() != a.generators.size()) {
    rep.check("inputs match", false, "action, derived system and map do not fit together");
    return rep;
  }
  rep.check("derived system is valid", derived.is_valid(),
            derived.is_valid() ? "" : derived.validate().first_failure()->value);
  if (!derived.is_valid()) return rep;

  Tally rchar("R_α = {A : A ⊆ V_{α⁻¹}}");
  const BooleanAlgebra& alg = derived.algebra();
  for (LabelId l = 0; l < derived.label_count(); ++l) {
    std::vector<AtomId> vinv(a.generators[l].V_inv.begin(), a.generators[l].V_inv.end());
    const Element v = alg.from_atoms(vinv);
    const Ideal r = derived.range_ideal(l);
    if (alg.size() <= 12) {
      for (const auto& x : alg.elements()) {
        rchar.add(leq(x, v) == r.contains(x), [&] { return derived.label_name(l) + " at " + derived.format(x); });
      }
    } else {
      rchar.add(r.generator == v, [&] { return derived.label_name(l); });
    }
  }
  rchar.emit(rep);

  BoundarySpace sp(derived);
  PartialAction pa(sp);
  Tally paths("f(x) ∈ ∂E");
  for (PointId x = 0; x < n; ++x) {
    std::string why;
    paths.add(sp.is_boundary_path(f[x], &why), [&] { return a.points[x] + ": " + why; });
  }
  paths.emit(rep);
  if (!paths.ok()) return rep;

  std::set<BoundaryPath> image(f.begin(), f.end());
  rep.check("f injective", image.size() == n);
  if (sp.boundary_is_finite()) {
    const auto all = sp.exact_boundary();
    rep.fact("|X|", std::to_string(n));
    rep.fact("|∂E|", std::to_string(all.size()));
    rep.check("f onto ∂E", std::set<BoundaryPath>(all.begin(), all.end()) == image,
              "|∂E| = " + std::to_string(all.size()) + ", |X| = " + std::to_string(n));
  } else {
    rep.check("f onto ∂E", false, "∂E of the derived system is infinite");
  }

  Tally equi("f∘ρ_{α^{±1}} = φ_{α^{±1}}∘f");
  Tally doms("x ∈ V_{α^{±1}} ⇔ f(x) ∈ U_{α^{±1}}");
  for (LabelId l = 0; l < a.generators.size(); ++l) {
    for (bool inv : {true, false}) {
      const FreeGroupElem g = inv ? FreeGroupElem::of(Word{}, Word::single(l)) : FreeGroupElem::of(Word::single(l));
      const auto& table = inv ? m->bwd[l] : m->fwd[l];
      const OpenSet dom = pa.domain_of(g.inverse());
      for (PointId x = 0; x < n; ++x) {
        const bool in_x = table[x] != kNone;
        const bool in_e = sp.contains(dom, f[x]);
        doms.add(in_x == in_e, [&] { return g.format(derived) + " at " + a.points[x]; });
        if (!in_x || !in_e) continue;
        const PointId y = static_cast<PointId>(table[x]);
        equi.add(f[y] == pa.act(g, f[x]), [&] {
          return g.format(derived) + " at " + a.points[x] + ": f(" + a.points[y] + ") = " + sp.format(f[y]) +
                 " but φ(f(" + a.points[x] + ")) = " + sp.format(pa.act(g, f[x]));
        });
      }
    }
  }
  equi.emit(rep);
  doms.emit(rep);

  Tally grp("(x, t, y) ↦ (f(x), t, f(y)) is an isomorphism onto the image");
  std::size_t elements = 0;
  for (const auto& t : FreeGroupElem::all(a.generators.size(), maxlen)) {
    const OpenSet dom = pa.domain_of(t.inverse());
    for (PointId y = 0; y < n; ++y) {
      auto x = apply_group(*m, t, y);
      const bool in_e = sp.contains(dom, f[y]);
      if (x) ++elements;
      grp.add(x.has_value() == in_e && (!x || f[*x] == pa.act(t, f[y])),
              [&] { return t.format(derived) + " at " + a.points[y]; });
    }
  }
  rep.fact("groupoid elements (|t| ≤ " + std::to_string(maxlen) + ")", std::to_string(elements));
  grp.emit(rep);

  Tally itin("itineraries: preperiod ≤ |X|, period ≤ |X|");
  for (PointId x = 0; x < n; ++x) {
    Itinerary it = itinerary(a, x);
    itin.add(it.word.size() <= n && it.cycle.size() <= n, [&] { return a.points[x]; });
  }
  itin.emit(rep);
  return rep;
}

Report verify_conjugacy(const FinitePartialAction& a, std::size_t maxlen) {
  Report valid = validate_action(a, maxlen);
  if (!valid.ok()) {
    Report rep("conjugacy X → ∂E");
    rep.absorb(valid);
    return rep;
  }
  const System derived = derive_bds(a);
  std::vector<BoundaryPath> f;
  for (PointId x = 0; x < a.points.size(); ++x) f.push_back(conjugacy_map(a, x));
  return verify_conjugacy(a, derived, f, maxlen);
}

Disjointification disjointify(const std::vector<std::set<std::size_t>>& family) {
  std::set<std::size_t> all;
  for (const auto& s : family) all.insert(s.begin(), s.end());
  Disjointification out;
  out.index_sets.resize(family.size());
  std::map<std::vector<bool>, std::size_t> part_of;
  for (std::size_t e : all) {
    std::vector<bool> sig(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) sig[i] = family[i].count(e) > 0;
    auto [it, fresh] = part_of.emplace(sig, out.parts.size());
    if (fresh) {
      out.parts.emplace_back();
      for (std::size_t i = 0; i < family.size(); ++i) {
        if (sig[i]) out.index_sets[i].insert(it->second);
      }
    }
    out.parts[it->second].insert(e);
  }
  return out;
}

FinitePartialAction boundary_action(const BoundarySpace& space) {
  const auto X = space.exact_boundary();
  PartialAction pa(space);
  const System& sys = space.system();
  FinitePartialAction out;
  std::map<BoundaryPath, PointId> id;
  for (const auto& mu : X) {
    id[mu] = out.points.size();
    out.points.push_back(space.format(mu));
  }
  for (LabelId l = 0; l < sys.label_count(); ++l) {
    GeneratorData g;
    g.label = sys.label_name(l);
    const FreeGroupElem t = FreeGroupElem::of(Word::single(l));
    const OpenSet U = pa.domain_of(t), Uinv = pa.domain_of(t.inverse());
    for (const auto& mu : X) {
      if (space.contains(U, mu)) g.V.push_back(id[mu]);
      if (space.contains(Uinv, mu)) {
        g.V_inv.push_back(id[mu]);
        g.rho.push_back({id[mu], id.at(pa.act(t, mu))});
      }
    }
    std::sort(g.V.begin(), g.V.end());
    std::sort(g.V_inv.begin(), g.V_inv.end());
    out.generators.push_back(std::move(g));
  }
  return out;
}

Report roundtrip(const System& sys, std::size_t maxlen) {
  Report rep("round trip through the partial action on ∂E");
  BoundarySpace space(sys);
  const FinitePartialAction act = boundary_action(space);
  const auto X = space.exact_boundary();
  rep.fact("|∂E|", std::to_string(X.size()));
  rep.absorb(validate_action(act, maxlen), "action: ");
  if (!rep.ok()) return rep;
  const System derived = derive_bds(act);
  std::vector<BoundaryPath> f;
  for (PointId x = 0; x < X.size(); ++x) f.push_back(conjugacy_map(act, x));
  rep.absorb(verify_conjugacy(act, derived, f, maxlen), "conjugacy: ");
  if (!rep.ok()) return rep;

  BoundarySpace space2(derived);
  PartialAction pa(space), pa2(space2);
  Tally iso("groupoid of ∂E ≅ groupoid of the derived system via f");
  for (const auto& t : FreeGroupElem::all(sys.label_count(), maxlen)) {
    const OpenSet d1 = pa.domain_of(t.inverse()), d2 = pa2.domain_of(t.inverse());
    for (PointId x = 0; x < X.size(); ++x) {
      const bool in1 = space.contains(d1, X[x]);
      const bool in2 = space2.contains(d2, f[x]);
      bool ok = in1 == in2;
      if (ok && in1) {
        const BoundaryPath y = pa.act(t, X[x]);
        const auto pos = std::find(X.begin(), X.end(), y) - X.begin();
        ok = f[static_cast<std::size_t>(pos)] == pa2.act(t, f[x]);
      }
      iso.add(ok, [&] { return t.format(sys) + " at " + space.format(X[x]); });
    }
  }
  iso.emit(rep);
  return rep;
}

bool same_system(const System& a, const System& b) {
  if (a.algebra().atom_names() != b.algebra().atom_names()) return false;
  if (a.label_count() != b.label_count()) return false;
  for (LabelId l = 0; l < a.label_count(); ++l) {
    if (a.label_name(l) != b.label_name(l)) return false;
    if (a.ideal_gen(l).bits() != b.ideal_gen(l).bits()) return false;
    const auto& ia = a.action(l).atom_image;
    const auto& ib = b.action(l).atom_image;
    for (std::size_t i = 0; i < ia.size(); ++i) {
      if (ia[i].bits() != ib[i].bits()) return false;
    }
  }
  return true;
}

FinitePartialAction random_action(std::mt19937_64& rng, std::size_t max_points, std::size_t max_generators) {
  FinitePartialAction a;
  std::uniform_int_distribution<std::size_t> npts(1, max_points), ngen(0, max_generators);
  const std::size_t n = npts(rng);
  const std::size_t k = ngen(rng);
  for (std::size_t i = 0; i < n; ++i) a.points.push_back("p" + std::to_string(i));
  a.generators.resize(k);
  for (std::size_t g = 0; g < k; ++g) a.generators[g].label = std::string(1, static_cast<char>('a' + g));
  // Each point lies in at most one V_α.
  std::uniform_int_distribution<std::size_t> owner(0, k);
  for (PointId x = 0; x < n; ++x) {
    const std::size_t o = owner(rng);
    if (o < k) a.generators[o].V.push_back(x);
  }
  std::vector<PointId> all(n);
  for (PointId x = 0; x < n; ++x) all[x] = x;
  for (auto& g : a.generators) {
    std::vector<PointId> pool = all;
    std::shuffle(pool.begin(), pool.end(), rng);
    g.V_inv.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(g.V.size()));
    std::sort(g.V_inv.begin(), g.V_inv.end());
    std::vector<PointId> targets = g.V;
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < g.V_inv.size(); ++i) g.rho.push_back({g.V_inv[i], targets[i]});
  }
  // Composites of partial bijections along reduced words always form a
  // semi-saturated partial action, so no sample is rejected here.
  return a;
}

std::string format_action(const FinitePartialAction& a) {
  auto set = [&](const std::vector<PointId>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + point_name(a, v[i]);
    return s + "}";
  };
  std::string out = "X = " + set([&] {
    std::vector<PointId> v(a.points.size());
    for (PointId i = 0; i < v.size(); ++i) v[i] = i;
    return v;
  }()) + "\n";
  for (const auto& g : a.generators) {
    out += "V_" + g.label + " = " + set(g.V) + ", V_" + g.label + "⁻¹ = " + set(g.V_inv) + ", ρ_" + g.label + ":";
    for (const auto& [from, to] : g.rho) out += " " + point_name(a, from) + "↦" + point_name(a, to);
    out += "\n";
  }
  return out;
}

}  // namespace gbds
