#include "frm/axioms.hpp"

#include <algorithm>
#include <set>

#include "frm/error.hpp"
#include "frm/spectra.hpp"

namespace frm {

namespace {

// Distinct values of e⁺x ∧ e⁻y or e⁺x ∨ e⁻y, each with its first (x, y).
struct Combo {
  Elem value, x, y;
};

std::vector<Combo> combos(const Biframe& b, bool use_join) {
  const FiniteFrame& l = b.main();
  std::vector<Combo> out;
  std::vector<bool> seen(l.size());
  for (Elem x = 0; x < b.plus().size(); ++x)
    for (Elem y = 0; y < b.minus().size(); ++y) {
      Elem p = b.e_plus()(x), m = b.e_minus()(y);
      Elem v = use_join ? l.join(p, m) : l.meet(p, m);
      if (!seen[v]) {
        seen[v] = true;
        out.push_back({v, x, y});
      }
    }
  return out;
}

struct Recorder {
  AxiomVerdict& v;
  void record(bool ok, ConditionWitness w = {}) {
    v.condition_results.push_back(ok);
    v.witnesses.push_back(ok ? std::nullopt : std::optional<ConditionWitness>(std::move(w)));
  }
};

void finish(AxiomVerdict& v) {
  const auto& r = v.condition_results;
  v.consistent = std::all_of(r.begin(), r.end(), [&](bool x) { return x == r.front(); });
}

void check_cap(const FinitaryAssembly& fin) {
  const std::size_t n = fin.family.congruences.size();
  if (n > default_caps().max_assembly)
    throw Error(ErrorKind::SizeLimitExceeded,
                "A_fin has " + std::to_string(n) + " elements, cap is " + std::to_string(default_caps().max_assembly),
                {n});
}

Congruence intersect_all(const FiniteFrame& l, const std::vector<Congruence>& cs) {
  Congruence acc = Congruence::all(l);
  for (const auto& c : cs) acc = meet(l, acc, c);
  return acc;
}

// ∇(w) = ⋁{Δ(v) : w ∨ v = ⊤} for every w = e⁺x ∧ e⁻y
std::optional<ConditionWitness> closed_is_join_of_opens(const Biframe& b) {
  const FiniteFrame& l = b.main();
  const auto joins = combos(b, true);
  for (const Combo& w : combos(b, false)) {
    std::vector<Congruence> parts;
    for (const Combo& v : joins)
      if (l.join(w.value, v.value) == l.top()) parts.push_back(delta(l, v.value));
    if (!(nabla(l, w.value) == join_all(l, parts)))
      return ConditionWitness{"∇(e⁺x ∧ e⁻y) is not the join of the Δ(e⁺y ∨ e⁻y) complementing it", {w.x, w.y}};
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::subfit: return "subfit";
    case Axiom::fit: return "fit";
    case Axiom::pairwise_t1: return "pairwise_t1";
  }
  return "?";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  if (name == "subfit") return Axiom::subfit;
  if (name == "fit") return Axiom::fit;
  if (name == "t1" || name == "pairwise_t1") return Axiom::pairwise_t1;
  return std::nullopt;
}

Congruence finitary_fitting(const Biframe& b, const Congruence& c) {
  const FiniteFrame& l = b.main();
  std::vector<Congruence> parts;
  for (const Combo& v : combos(b, true)) {
    Congruence d = delta(l, v.value);
    if (d.subset_of(c)) parts.push_back(std::move(d));
  }
  return join_all(l, parts);
}

AxiomVerdict subfit_verdict(const Biframe& b) { return subfit_verdict(b, finitary_assembly(b)); }

AxiomVerdict subfit_verdict(const Biframe& b, const FinitaryAssembly& fin) {
  check_cap(fin);
  const FiniteFrame& l = b.main();
  AxiomVerdict v{Axiom::subfit, {}, {}, true};
  Recorder rec{v};
  const auto meets = combos(b, false), joins = combos(b, true);

  // (1) a ∧ w ≰ b  ⇒  ∃ v: w ∨ v = ⊤ and a ≰ v ∨ b
  {
    std::optional<ConditionWitness> bad;
    for (Elem a = 0; a < l.size() && !bad; ++a)
      for (const Combo& w : meets) {
        for (Elem c = 0; c < l.size() && !bad; ++c) {
          if (l.leq(l.meet(a, w.value), c)) continue;
          bool found = false;
          for (const Combo& u : joins)
            if (l.join(w.value, u.value) == l.top() && !l.leq(a, l.join(u.value, c))) {
              found = true;
              break;
            }
          if (!found) bad = ConditionWitness{"a ∧ e⁺x ∧ e⁻y ≰ b with no separating e⁺y ∨ e⁻y (a, x, y, b)",
                                             {a, w.x, w.y, c}};
        }
        if (bad) break;
      }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (2) Δ(w) = ⋂{∇(v) : w ∨ v = ⊤}
  {
    std::optional<ConditionWitness> bad;
    for (const Combo& w : meets) {
      std::vector<Congruence> parts;
      for (const Combo& u : joins)
        if (l.join(w.value, u.value) == l.top()) parts.push_back(nabla(l, u.value));
      if (!(delta(l, w.value) == intersect_all(l, parts))) {
        bad = ConditionWitness{"Δ(e⁺x ∧ e⁻y) is not the meet of the complementing ∇(e⁺y ∨ e⁻y)", {w.x, w.y}};
        break;
      }
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (3) every Δ(z) is an intersection of finitary closed congruences
  {
    std::vector<Congruence> closed;
    for (const Combo& u : joins) closed.push_back(nabla(l, u.value));
    std::optional<ConditionWitness> bad;
    for (Elem z = 0; z < l.size() && !bad; ++z) {
      Congruence dz = delta(l, z);
      std::vector<Congruence> above;
      for (const auto& c : closed)
        if (dz.subset_of(c)) above.push_back(c);
      if (!(intersect_all(l, above) == dz)) bad = ConditionWitness{"Δ(z) is not an intersection of ∇(e⁺y ∨ e⁻y)", {z}};
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (4) trivial finitary fitting ⇒ trivial
  {
    std::optional<ConditionWitness> bad;
    const auto& cs = fin.family.congruences;
    for (std::size_t i = 0; i < cs.size() && !bad; ++i)
      if (!cs[i].is_diagonal() && finitary_fitting(b, cs[i]).is_diagonal())
        bad = ConditionWitness{"nontrivial finitary congruence with trivial finitary fitting (A_fin index)", {i}};
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }
  finish(v);
  return v;
}

AxiomVerdict fit_verdict(const Biframe& b) { return fit_verdict(b, finitary_assembly(b)); }

AxiomVerdict fit_verdict(const Biframe& b, const FinitaryAssembly& fin) {
  check_cap(fin);
  const FiniteFrame& l = b.main();
  AxiomVerdict v{Axiom::fit, {}, {}, true};
  Recorder rec{v};
  const auto meets = combos(b, false), joins = combos(b, true);
  const auto& cs = fin.family.congruences;

  // (1) w ≰ a  ⇒  ∃ v: w ∨ v = ⊤ and (v → a) ≠ a
  {
    std::optional<ConditionWitness> bad;
    for (const Combo& w : meets) {
      for (Elem a = 0; a < l.size() && !bad; ++a) {
        if (l.leq(w.value, a)) continue;
        bool found = false;
        for (const Combo& u : joins)
          if (l.join(w.value, u.value) == l.top() && heyting(l, u.value, a) != a) {
            found = true;
            break;
          }
        if (!found) bad = ConditionWitness{"e⁺x ∧ e⁻y ≰ a with no e⁺y ∨ e⁻y moving a (x, y, a)", {w.x, w.y, a}};
      }
      if (bad) break;
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (2)
  {
    auto bad = closed_is_join_of_opens(b);
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (3) equal finitary fittings ⇒ equal
  {
    std::vector<Congruence> fits;
    for (const auto& c : cs) fits.push_back(finitary_fitting(b, c));
    std::optional<ConditionWitness> bad;
    for (std::size_t i = 0; i < cs.size() && !bad; ++i)
      for (std::size_t j = 0; j < i && !bad; ++j)
        if (fits[i] == fits[j])
          bad = ConditionWitness{"distinct finitary congruences share a finitary fitting (A_fin indices)", {j, i}};
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (4) every ∇(z) is finitary fitted
  {
    std::optional<ConditionWitness> bad;
    for (Elem z = 0; z < l.size() && !bad; ++z) {
      Congruence nz = nabla(l, z);
      if (!(finitary_fitting(b, nz) == nz)) bad = ConditionWitness{"∇(z) is not finitary fitted", {z}};
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (5) every finitary congruence is finitary fitted
  {
    std::optional<ConditionWitness> bad;
    for (std::size_t i = 0; i < cs.size() && !bad; ++i)
      if (!(finitary_fitting(b, cs[i]) == cs[i]))
        bad = ConditionWitness{"finitary congruence is not finitary fitted (A_fin index)", {i}};
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (6) every biquotient satisfies (2)
  {
    std::optional<ConditionWitness> bad;
    for (std::size_t i = 0; i < cs.size() && !bad; ++i) {
      if (cs[i].is_all()) continue;  // the one-point biframe is fit
      BiquotientResult q = biquotient(b, cs[i]);
      if (closed_is_join_of_opens(q.biframe))
        bad = ConditionWitness{"biquotient fails the closed-congruence condition (A_fin index)", {i}};
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }
  finish(v);
  return v;
}

AxiomVerdict pairwise_t1_verdict(const Biframe& b) { return pairwise_t1_verdict(b, finitary_assembly(b)); }

AxiomVerdict pairwise_t1_verdict(const Biframe& b, const FinitaryAssembly& fin) {
  check_cap(fin);
  Bispectrum spec = bpt(b);
  const std::size_t n = spec.points.size();
  if (n > default_caps().max_points)
    throw Error(ErrorKind::SizeLimitExceeded, "spectrum too large for subset enumeration", {n});
  const PointSet all = full_set(n);
  AxiomVerdict v{Axiom::pairwise_t1, {}, {}, true};
  Recorder rec{v};

  // (1) Salbany
  {
    std::optional<ConditionWitness> bad;
    if (!pairwise_t1_space(spec.space)) {
      for (std::size_t x = 0; x < n && !bad; ++x)
        for (std::size_t y = 0; y < n && !bad; ++y) {
          if (x == y) continue;
          bool sep = false;
          for (const Family* f : {&spec.space.opens_plus(), &spec.space.opens_minus()})
            for (PointSet u : *f) sep = sep || ((u >> x & 1) && !(u >> y & 1));
          if (!sep) bad = ConditionWitness{"no open contains the first point and omits the second", {x, y}};
        }
      if (!bad) bad = ConditionWitness{"not pairwise T1", {}};
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (2) {f} = φ⁺(a)ᶜ ∩ φ⁻(a′)ᶜ
  {
    std::optional<ConditionWitness> bad;
    for (std::size_t f = 0; f < n && !bad; ++f) {
      bool found = false;
      for (PointSet p : spec.phi_plus)
        for (PointSet m : spec.phi_minus) found = found || ((all & ~p & ~m) == PointSet{1} << f);
      if (!found) bad = ConditionWitness{"singleton is not φ⁺(a)ᶜ ∩ φ⁻(a′)ᶜ (point)", {f}};
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (3) negative topology of the closed-fitted Skula bispace is the powerset
  {
    FiniteBispace cf = skula_variant(spec.space, SkulaVariant::cf);
    std::optional<ConditionWitness> bad;
    if (cf.opens_minus().size() != (std::size_t{1} << n)) {
      for (std::size_t f = 0; f < n && !bad; ++f)
        if (!std::binary_search(cf.opens_minus().begin(), cf.opens_minus().end(), PointSet{1} << f))
          bad = ConditionWitness{"singleton is not negatively open in the closed-fitted Skula bispace", {f}};
      if (!bad) bad = ConditionWitness{"negative Skula topology is not discrete", {}};
    }
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }

  // (4) every subset is the spectrum of a finitary fitted biquotient
  {
    std::set<PointSet> reached;
    for (const auto& c : fin.family.congruences)
      if (finitary_fitting(b, c) == c) reached.insert(quotient_spectrum(spec, c));
    std::optional<ConditionWitness> bad;
    for (PointSet s = 0; s <= all && !bad; ++s)
      if (!reached.count(s)) bad = ConditionWitness{"point set is no finitary fitted spectrum (bitmask)", {s}};
    rec.record(!bad, bad.value_or(ConditionWitness{}));
  }
  finish(v);
  return v;
}

AxiomVerdict axiom_verdict(const Biframe& b, const FinitaryAssembly& fin, Axiom a) {
  switch (a) {
    case Axiom::subfit: return subfit_verdict(b, fin);
    case Axiom::fit: return fit_verdict(b, fin);
    case Axiom::pairwise_t1: return pairwise_t1_verdict(b, fin);
  }
  throw Error(ErrorKind::BadInput, "unknown axiom");
}

}  // namespace frm
