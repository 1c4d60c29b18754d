#include "gbds/partial_action.hpp"

#include <map>
#include <random>

namespace gbds {

PartialAction::PartialAction(BoundarySpace space) : space_(std::move(space)) {}

OpenSet PartialAction::domain_of(const FreeGroupElem& t) const {
  if (t.is_identity()) return space_.universe();
  auto sh = t.shape();
  if (!sh) return space_.empty_set();
  const auto& [alpha, beta] = *sh;
  const System& sys = system();
  return space_.cylinder(alpha, sys.word_gen(alpha) & sys.word_gen(beta));
}

bool PartialAction::in_domain(const FreeGroupElem& t, const BoundaryPath& mu) const {
  return space_.contains(domain_of(t.inverse()), mu);
}

BoundaryPath PartialAction::act(const FreeGroupElem& t, const BoundaryPath& mu) const {
  if (!in_domain(t, mu)) {
    throw DomainError("path " + space_.format(mu) + " is not in the domain of φ_" + t.format(system()));
  }
  if (t.is_identity()) return mu;
  const auto sh = t.shape();
  const auto& [alpha, beta] = *sh;
  std::optional<AtomId> x = beta.empty() ? space_.range_of_path(mu) : mu.edge(beta.size()).atom;
  BoundaryPath rest = mu.drop(beta.size());
  std::vector<Edge> head(alpha.size());
  AtomId cur = *x;
  for (std::size_t i = alpha.size(); i > 0; --i) {
    head[i - 1] = {alpha[i - 1], cur};
    if (i > 1) cur = *system().pre(alpha[i - 1], cur);
  }
  return rest.prepend(head);
}

OpenSet PartialAction::act_on_openset(const FreeGroupElem& t, const OpenSet& s) const {
  if (!space_.subset(s, domain_of(t.inverse()))) {
    throw PreconditionError("open set " + space_.format(s) + " is not contained in U_" +
                            t.inverse().format(system()));
  }
  if (t.is_identity()) return s;
  if (s.empty()) return space_.empty_set();
  const auto sh = t.shape();
  const auto& [alpha, beta] = *sh;
  OpenSet src = space_.refine(s, std::max(s.depth, beta.size()));
  std::vector<CellKey> cells;
  cells.reserve(src.cells.size());
  for (const auto& c : src.cells) cells.push_back({alpha + c.word.sub(beta.size()), c.atom});
  return space_.make(src.depth - beta.size() + alpha.size(), std::move(cells));
}

Bisection PartialAction::bisection(const FreeGroupElem& t, const OpenSet& source) const {
  if (!space_.subset(source, domain_of(t.inverse()))) {
    throw PreconditionError("bisection source is not contained in U_" + t.inverse().format(system()));
  }
  return {t, source};
}

Bisection PartialAction::mul(const Bisection& a, const Bisection& b) const {
  OpenSet mid = space_.intersect(act_on_openset(b.t, b.source), a.source);
  OpenSet src = act_on_openset(b.t.inverse(), mid);
  FreeGroupElem t = a.t * b.t;
  if (!src.empty() && !t.shape() && !t.is_identity()) {
    throw Error("internal: nonempty bisection at a group element without αβ⁻¹ shape");
  }
  return {t, src};
}

Bisection PartialAction::star(const Bisection& b) const {
  return {b.t.inverse(), act_on_openset(b.t, b.source)};
}

OpenSet PartialAction::range(const Bisection& b) const { return act_on_openset(b.t, b.source); }

bool PartialAction::equal(const Bisection& a, const Bisection& b) const {
  if (a.source.empty() && b.source.empty()) return true;
  return a.t == b.t && space_.equal(a.source, b.source);
}

Bisection PartialAction::projection(const Element& a) const {
  return {FreeGroupElem{}, space_.cylinder(Word{}, a)};
}

Bisection PartialAction::partial_isometry(const Word& alpha, const Element& b) const {
  if (!leq(b, system().word_gen(alpha))) throw PreconditionError("S_{α,B} needs B ∈ I_α");
  return {FreeGroupElem::of(alpha), space_.cylinder(Word{}, b)};
}

std::string PartialAction::format(const Bisection& b) const {
  return "(" + b.t.format(system()) + ", " + space_.format(b.source) + ")";
}

// Checks ---------------------------------------------------------------------

namespace {

std::vector<Word> all_words(std::size_t labels, std::size_t maxlen) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= maxlen; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (LabelId l = 0; l < labels; ++l) out.push_back(out[i] + Word::single(l));
    }
    begin = end;
  }
  return out;
}

}  // namespace

Report PartialAction::check_axioms(std::size_t depth, std::size_t samples, std::uint64_t seed) const {
  const System& sys = system();
  const BoundarySpace& sp = space_;
  Report rep("partial action axioms (depth " + std::to_string(depth) + ")");
  const auto group = FreeGroupElem::all(sys.label_count(), depth);
  std::map<FreeGroupElem, OpenSet> cache;
  auto U = [&](const FreeGroupElem& g) -> const OpenSet& {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, domain_of(g)).first;
    return it->second;
  };
  auto fmt = [&](const FreeGroupElem& g) { return g.format(sys); };
  rep.fact("group elements", std::to_string(group.size()));

  Tally unit("axiom (1): U_ε = ∂E and φ_ε = id");
  unit.add(sp.equal(U(FreeGroupElem{}), sp.universe()), [] { return "U_ε ≠ ∂E"; });
  for (const auto& t : group) {
    const OpenSet& u = U(t);
    unit.add(sp.equal(act_on_openset(FreeGroupElem{}, u), u), [&] { return "φ_ε moves U_" + fmt(t); });
  }
  unit.emit(rep);

  Tally ax2("axiom (2): φ_t(U_{t⁻¹} ∩ U_s) = U_t ∩ U_{ts}");
  Tally ax3("axiom (3): φ_s∘φ_t = φ_{st} on U_{t⁻¹} ∩ U_{(st)⁻¹}");
  Tally semi("semi-saturation: dom(φ_s∘φ_t) = U_{(st)⁻¹} when |st| = |s|+|t|");
  for (const auto& t : group) {
    const FreeGroupElem ti = t.inverse();
    for (const auto& s : group) {
      const FreeGroupElem ts = t * s;
      OpenSet lhs = act_on_openset(t, sp.intersect(U(ti), U(s)));
      OpenSet rhs = sp.intersect(U(t), U(ts));
      ax2.add(sp.equal(lhs, rhs), [&] {
        return "t=" + fmt(t) + ", s=" + fmt(s) + ": " + sp.format(lhs) + " vs " + sp.format(rhs);
      });

      const FreeGroupElem st = s * t;
      OpenSet dom = sp.intersect(U(ti), U(st.inverse()));
      bool agree = true;
      std::string where;
      for (const auto& cell : dom.cells) {
        OpenSet one{dom.depth, {cell}};
        OpenSet a = act_on_openset(s, act_on_openset(t, one));
        OpenSet b = act_on_openset(st, one);
        if (!sp.equal(a, b)) {
          agree = false;
          where = sp.format(one);
          break;
        }
      }
      ax3.add(agree, [&] { return "s=" + fmt(s) + ", t=" + fmt(t) + " differ on " + where; });

      if (st.length() == s.length() + t.length()) {
        OpenSet comp = act_on_openset(ti, sp.intersect(U(t), U(s.inverse())));
        semi.add(sp.equal(comp, U(st.inverse())), [&] {
          return "s=" + fmt(s) + ", t=" + fmt(t) + ": " + sp.format(comp) + " vs " +
                 sp.format(U(st.inverse()));
        });
      }
    }
  }
  ax2.emit(rep);
  ax3.emit(rep);
  semi.emit(rep);

  Tally orth("orthogonality: U_a ∩ U_b = ∅ for distinct labels");
  for (LabelId a = 0; a < sys.label_count(); ++a) {
    for (LabelId b = a + 1; b < sys.label_count(); ++b) {
      OpenSet both = sp.intersect(U(FreeGroupElem::of(Word::single(a))), U(FreeGroupElem::of(Word::single(b))));
      orth.add(both.empty(), [&] {
        return "U_" + sys.label_name(a) + " ∩ U_" + sys.label_name(b) + " = " + sp.format(both);
      });
    }
  }
  orth.emit(rep);

  Tally composite("composite domain: dom(φ_{α₁}∘⋯∘φ_{αₙ}) = U_{α⁻¹}");
  for (const Word& w : all_words(sys.label_count(), depth)) {
    if (w.empty()) continue;
    OpenSet dom = sp.universe();
    for (std::size_t k = 0; k < w.size(); ++k) {
      FreeGroupElem g = FreeGroupElem::of(Word::single(w[k]));
      dom = act_on_openset(g.inverse(), sp.intersect(U(g), dom));
    }
    const OpenSet& expect = U(FreeGroupElem::of(Word{}, w));
    composite.add(sp.equal(dom, expect), [&] {
      return "α=" + sys.format_word(w) + ": " + sp.format(dom) + " vs " + sp.format(expect);
    });
  }
  composite.emit(rep);

  Tally clopen("U_t is clopen (exact complement)");
  for (const auto& t : group) {
    if (t.length() > 3) continue;
    const OpenSet& u = U(t);
    OpenSet c = sp.complement(u);
    clopen.add(sp.intersect(u, c).empty() && sp.equal(sp.unite(u, c), sp.universe()),
               [&] { return "U_" + fmt(t); });
  }
  clopen.emit(rep);

  const auto pool = sp.paths(depth);
  rep.fact("path pool", std::to_string(pool.size()));
  Tally shift("φ_{α⁻¹} = σ^{|α|} on U_α");
  for (const Word& w : sys.wstar(depth)) {
    FreeGroupElem g = FreeGroupElem::of(Word{}, w);
    for (const auto& mu : pool) {
      if (!in_domain(g, mu)) continue;
      shift.add(act(g, mu) == mu.drop(w.size()), [&] { return sys.format_word(w) + " on " + sp.format(mu); });
    }
  }
  shift.emit(rep);

  Tally point("pointwise: φ_t(μ) ∈ U_t and φ_{t⁻¹}φ_t(μ) = μ");
  Tally guard("pointwise: φ_t(μ) raises a domain error off U_{t⁻¹}");
  for (const auto& t : group) {
    for (const auto& mu : pool) {
      if (in_domain(t, mu)) {
        BoundaryPath nu = act(t, mu);
        bool ok = sp.is_boundary_path(nu) && sp.contains(U(t), nu) && act(t.inverse(), nu) == mu;
        point.add(ok, [&] { return "t=" + fmt(t) + ", μ=" + sp.format(mu); });
      } else {
        bool threw = false;
        try {
          (void)act(t, mu);
        } catch (const DomainError&) {
          threw = true;
        }
        guard.add(threw, [&] { return "t=" + fmt(t) + ", μ=" + sp.format(mu); });
      }
    }
  }
  point.emit(rep);
  guard.emit(rep);

  Tally sampled("pointwise axiom (3) on random triples");
  if (!pool.empty()) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_g(0, group.size() - 1), pick_p(0, pool.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& s = group[pick_g(rng)];
      const auto& t = group[pick_g(rng)];
      const auto& mu = pool[pick_p(rng)];
      if (!in_domain(t, mu)) continue;
      BoundaryPath nu = act(t, mu);
      if (!in_domain(s, nu)) continue;
      const FreeGroupElem st = s * t;
      bool ok = in_domain(st, mu) && act(s, nu) == act(st, mu);
      sampled.add(ok, [&] { return "s=" + fmt(s) + ", t=" + fmt(t) + ", μ=" + sp.format(mu); });
    }
  }
  sampled.emit(rep);
  return rep;
}

Report PartialAction::ck_check(std::size_t maxlen) const {
  const System& sys = system();
  const BoundarySpace& sp = space_;
  const BooleanAlgebra& alg = sys.algebra();
  Report rep("Cuntz–Krieger relations");
  const auto elems = alg.elements();
  auto fmtb = [&](const Bisection& b) { return format(b); };

  Tally r1("relation (i): P_A·P_B = P_{A∩B}, P_A ∪ P_B = P_{A∪B}, P_A* = P_A, P_∅ = 0");
  r1.add(projection(alg.empty()).source.empty(), [] { return "P_∅ ≠ 0"; });
  for (const auto& a : elems) {
    Bisection pa = projection(a);
    r1.add(equal(star(pa), pa), [&] { return "P_" + sys.format(a) + "* ≠ P_" + sys.format(a); });
    for (const auto& b : elems) {
      Bisection pb = projection(b);
      r1.add(equal(mul(pa, pb), projection(a & b)),
             [&] { return "P_" + sys.format(a) + "·P_" + sys.format(b); });
      r1.add(sp.equal(sp.unite(pa.source, pb.source), projection(a | b).source),
             [&] { return "P_" + sys.format(a) + " ∪ P_" + sys.format(b); });
    }
  }
  r1.emit(rep);

  Tally r2("relation (ii): P_A·S_{α,B} = S_{α,B}·P_{θ_α(A)}");
  Tally r3("relation (iii): S_{α,B}*·S_{α′,B′} = δ_{α,α′} P_{B∩B′}");
  for (LabelId l = 0; l < sys.label_count(); ++l) {
    const Word w = Word::single(l);
    const auto below = alg.elements_below(sys.ideal_gen(l));
    for (const auto& b : below) {
      Bisection s = partial_isometry(w, b);
      for (const auto& a : elems) {
        Bisection lhs = mul(projection(a), s);
        Bisection rhs = mul(s, projection(sys.apply(l, a)));
        r2.add(equal(lhs, rhs), [&] {
          return "A=" + sys.format(a) + ", α=" + sys.label_name(l) + ", B=" + sys.format(b) + ": " +
                 fmtb(lhs) + " vs " + fmtb(rhs);
        });
      }
      for (LabelId l2 = 0; l2 < sys.label_count(); ++l2) {
        for (const auto& b2 : alg.elements_below(sys.ideal_gen(l2))) {
          Bisection lhs = mul(star(s), partial_isometry(Word::single(l2), b2));
          Bisection rhs = l == l2 ? projection(b & b2) : Bisection{};
          r3.add(equal(lhs, rhs), [&] {
            return "S_{" + sys.label_name(l) + "," + sys.format(b) + "}*·S_{" + sys.label_name(l2) + "," +
                   sys.format(b2) + "} = " + fmtb(lhs);
          });
        }
      }
    }
  }
  r2.emit(rep);
  r3.emit(rep);

  Tally r4("relation (iv): P_A = ⊔_{α∈Δ_A} S_{α,θ_α(A)}S_{α,θ_α(A)}* for regular A");
  std::size_t regular = 0;
  for (const auto& a : elems) {
    if (a.empty() || !sys.is_regular(a)) continue;
    ++regular;
    OpenSet acc = sp.empty_set();
    bool disjoint = true;
    for (LabelId l : sys.delta(a)) {
      Bisection s = partial_isometry(Word::single(l), sys.apply(l, a));
      Bisection ss = mul(s, star(s));
      OpenSet piece = ss.source;
      if (!ss.t.is_identity() && !piece.empty()) disjoint = false;
      if (!sp.intersect(acc, piece).empty()) disjoint = false;
      acc = sp.unite(acc, piece);
    }
    OpenSet pa = projection(a).source;
    r4.add(disjoint && sp.equal(acc, pa), [&] {
      return "A=" + sys.format(a) + ": " + sp.format(acc) + " vs " + sp.format(pa);
    });
  }
  r4.emit(rep);
  rep.fact("regular sets", std::to_string(regular));

  Report fact = factorization_check(maxlen);
  rep.absorb(fact);
  return rep;
}

Report PartialAction::factorization_check(std::size_t maxlen) const {
  const System& sys = system();
  const BoundarySpace& sp = space_;
  const BooleanAlgebra& alg = sys.algebra();
  Report rep("bisection identities (|α|, |β| ≤ " + std::to_string(maxlen) + ")");
  const auto words = sys.wstar(maxlen);
  const auto elems = alg.elements();
  auto fw = [&](const Word& w) { return sys.format_word(w); };

  Tally basic("(i) φ_{α⁻¹}(𝒩(α,A)) = 𝒩(ε,A) and φ_α(𝒩(ε,A)) = 𝒩(α,A)");
  Tally tele("(ii) (α,𝒩(ε,A)) = S_{α₁}⋯S_{αₙ,A}");
  Tally starf("(iii) (α,𝒩(ε,A))* = (α⁻¹,𝒩(α,A))");
  Tally range("(iv) S_{α,A}S_{α,A}* = (ε,𝒩(α,A))");
  Tally comm("(vi) P_A·S_{α,B} = S_{α,B}·P_{θ_α(A)}");
  for (const Word& w : words) {
    const FreeGroupElem g = FreeGroupElem::of(w);
    const auto below = alg.elements_below(sys.word_gen(w));
    for (const auto& a : below) {
      OpenSet base = sp.cylinder(Word{}, a);
      OpenSet cyl = sp.cylinder(w, a);
      basic.add(sp.equal(act_on_openset(g.inverse(), cyl), base) && sp.equal(act_on_openset(g, base), cyl),
                [&] { return "α=" + fw(w) + ", A=" + sys.format(a); });

      Bisection s = partial_isometry(w, a);
      if (w.size() >= 2) {
        Bisection prod = partial_isometry(Word::single(w[w.size() - 1]), a);
        for (std::size_t i = w.size() - 1; i > 0; --i) {
          prod = mul(partial_isometry(Word::single(w[i - 1]), sys.ideal_gen(w[i - 1])), prod);
        }
        tele.add(equal(prod, s), [&] { return "α=" + fw(w) + ", A=" + sys.format(a) + ": " + format(prod); });
      }
      starf.add(equal(star(s), Bisection{g.inverse(), cyl}),
                [&] { return "α=" + fw(w) + ", A=" + sys.format(a); });
      range.add(equal(mul(s, star(s)), Bisection{FreeGroupElem{}, cyl}),
                [&] { return "α=" + fw(w) + ", A=" + sys.format(a); });
      for (const auto& p : elems) {
        Bisection lhs = mul(projection(p), s);
        Bisection rhs = mul(s, projection(sys.apply_word(w, p)));
        comm.add(equal(lhs, rhs), [&] {
          return "A=" + sys.format(p) + ", α=" + fw(w) + ", B=" + sys.format(a);
        });
      }
    }
  }

  Tally split("(v) (αβ⁻¹,𝒩(β,A)) = (α,𝒩(ε,A))·(β⁻¹,𝒩(β,A))");
  Tally approx("approximate identity: ⋃_{A∈I_β} 𝒩(α, A ∩ I_α) = U_{αβ⁻¹}");
  for (const Word& a : words) {
    for (const Word& b : words) {
      const Element both = sys.word_gen(a) & sys.word_gen(b);
      for (const auto& x : alg.elements_below(both)) {
        Bisection lhs{FreeGroupElem::of(a, b), sp.cylinder(b, x)};
        Bisection rhs = mul(partial_isometry(a, x), Bisection{FreeGroupElem::of(Word{}, b), sp.cylinder(b, x)});
        split.add(equal(lhs, rhs), [&] {
          return "α=" + fw(a) + ", β=" + fw(b) + ", A=" + sys.format(x) + ": " + format(rhs);
        });
      }
      if (!a.empty() && !b.empty() && a.back() == b.back()) continue;
      // ∂E contains paths with empty range when some edge has no preimage;
      // no cylinder at ε covers those, so U_ε is compared only when there
      // are none.
      if (a.empty() && b.empty() && sys.has_empty_range_edges()) continue;
      OpenSet uni = sp.empty_set();
      for (const auto& x : alg.elements_below(sys.word_gen(b))) {
        uni = sp.unite(uni, sp.cylinder(a, x & sys.word_gen(a)));
      }
      OpenSet u = domain_of(FreeGroupElem::of(a, b));
      bool ok = true;
      const std::size_t lo = std::max(uni.depth, u.depth);
      for (std::size_t d = lo; d <= maxlen + 1 || d == lo; ++d) {
        ok = ok && sp.refine(uni, d).cells == sp.refine(u, d).cells;
      }
      approx.add(ok, [&] { return "α=" + fw(a) + ", β=" + fw(b); });
    }
  }
  basic.emit(rep);
  tele.emit(rep);
  starf.emit(rep);
  range.emit(rep);
  split.emit(rep);
  comm.emit(rep);
  approx.emit(rep);
  return rep;
}

}  // namespace gbds
