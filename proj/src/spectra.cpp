#include "frm/spectra.hpp"

#include <algorithm>
#include <set>

#include "frm/error.hpp"

namespace frm {

namespace {

PointSet mask_of(const std::vector<FrameHom>& points, Elem z) {
  PointSet s = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i](z) == 1) s |= PointSet{1} << i;
  return s;
}

Family distinct(std::vector<PointSet> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string show(PointSet s) { return std::to_string(s); }

}  // namespace

Bispectrum bpt(const Biframe& b) {
  std::vector<FrameHom> points = frame_points(b.main());
  if (points.size() > kMaxPoints)
    throw Error(ErrorKind::SizeLimitExceeded, "spectrum has more than 64 points", {points.size()});
  Bispectrum out{FiniteBispace{}, std::move(points), {}, {}, {}};
  for (Elem z = 0; z < b.main().size(); ++z) out.phi_main.push_back(mask_of(out.points, z));
  for (Elem x = 0; x < b.plus().size(); ++x) out.phi_plus.push_back(out.phi_main[b.e_plus()(x)]);
  for (Elem y = 0; y < b.minus().size(); ++y) out.phi_minus.push_back(out.phi_main[b.e_minus()(y)]);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.points.size(); ++i) labels.push_back("h" + std::to_string(i));
  out.space = FiniteBispace(out.points.size(), distinct(out.phi_plus), distinct(out.phi_minus), std::move(labels));
  return out;
}

PointSet quotient_spectrum(const Bispectrum& spec, const Congruence& c) {
  PointSet s = 0;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    const FrameHom& f = spec.points[i];
    bool constant = true;
    for (Elem x = 0; x < f.source().size() && constant; ++x) constant = f(x) == f(c.top_of(x));
    if (constant) s |= PointSet{1} << i;
  }
  return s;
}

std::string quotient_spectrum_mismatch(const Biframe& b, const Bispectrum& spec, const Congruence& c) {
  BiquotientResult q = biquotient(b, c);
  Bispectrum sq = bpt(q.biframe);
  std::vector<std::size_t> map;
  PointSet hit = 0;
  for (const FrameHom& g : sq.points) {
    std::vector<Elem> pulled(b.main().size());
    for (Elem x = 0; x < pulled.size(); ++x) pulled[x] = g(q.quotient.q(x));
    auto it = std::find_if(spec.points.begin(), spec.points.end(),
                           [&](const FrameHom& f) { return f.image() == pulled; });
    if (it == spec.points.end()) return "a point of the quotient does not pull back to a point";
    std::size_t i = std::size_t(it - spec.points.begin());
    if (hit >> i & 1) return "two quotient points pull back to the same point";
    hit |= PointSet{1} << i;
    map.push_back(i);
  }
  const PointSet s = quotient_spectrum(spec, c);
  if (hit != s) return "pulled-back points " + show(hit) + " differ from the quotient spectrum " + show(s);
  auto subspace = [&](const Family& f) {
    std::vector<PointSet> v;
    for (PointSet u : f) v.push_back(u & s);
    return distinct(v);
  };
  if (transport(sq.space.opens_plus(), map) != subspace(spec.space.opens_plus()))
    return "positive topology of the quotient is not the subspace topology";
  if (transport(sq.space.opens_minus(), map) != subspace(spec.space.opens_minus()))
    return "negative topology of the quotient is not the subspace topology";
  return {};
}

FactsReport spectra_facts(const Biframe& b, const Bispectrum& spec, const FinitaryAssembly& fin) {
  FactsReport r;
  const FiniteFrame& l = b.main();
  const PointSet all = full_set(spec.points.size());
  const auto& cs = fin.family.congruences;
  std::vector<PointSet> sp;
  for (const auto& c : cs) sp.push_back(quotient_spectrum(spec, c));

  if (quotient_spectrum(spec, Congruence::diagonal(l)) != all) {
    r.joins = false;
    r.failures.push_back("empty join: spectrum of the diagonal is not every point");
  }
  for (std::size_t i = 0; i < cs.size() && r.joins; ++i)
    for (std::size_t j = 0; j < i && r.joins; ++j)
      if (quotient_spectrum(spec, join(l, cs[i], cs[j])) != (sp[i] & sp[j])) {
        r.joins = false;
        r.failures.push_back("spectrum of C" + std::to_string(i) + " ∨ C" + std::to_string(j) +
                             " is not the intersection");
      }

  for (Side s : {Side::plus, Side::minus}) {
    const char* name = s == Side::plus ? "+" : "-";
    for (Elem a = 0; a < b.side(s).size(); ++a) {
      Elem ea = b.embed(s)(a);
      if (r.open_sides && quotient_spectrum(spec, delta(l, ea)) != spec.phi(s)[a]) {
        r.open_sides = false;
        r.failures.push_back(std::string("spectrum of Δ(e") + name + " " + std::to_string(a) + ") is not φ(a)");
      }
      if (r.closed_sides && quotient_spectrum(spec, nabla(l, ea)) != (all & ~spec.phi(s)[a])) {
        r.closed_sides = false;
        r.failures.push_back(std::string("spectrum of ∇(e") + name + " " + std::to_string(a) + ") is not φ(a)ᶜ");
      }
    }
  }

  for (Elem x = 0; x < b.plus().size() && r.inequality; ++x)
    for (Elem x2 = 0; x2 < b.minus().size() && r.inequality; ++x2) {
      Elem lhs = l.meet(b.e_plus()(x), b.e_minus()(x2));
      for (Elem y = 0; y < b.plus().size() && r.inequality; ++y)
        for (Elem y2 = 0; y2 < b.minus().size() && r.inequality; ++y2) {
          Elem rhs = l.join(b.e_plus()(y), b.e_minus()(y2));
          std::vector<Seed> seed{{lhs, rhs, SeedMode::force_leq}};
          PointSet got = quotient_spectrum(spec, congruence_closure(l, seed));
          PointSet want = (all & ~spec.phi_plus[x]) | (all & ~spec.phi_minus[x2]) | spec.phi_plus[y] | spec.phi_minus[y2];
          if (got != want) {
            r.inequality = false;
            r.failures.push_back("forced inequality (" + std::to_string(x) + "," + std::to_string(x2) + ") ≤ (" +
                                 std::to_string(y) + "," + std::to_string(y2) + ") has spectrum " + show(got) +
                                 ", expected " + show(want));
          }
        }
    }
  return r;
}

BisoberFamily bisober_family(const Biframe& b, const Bispectrum& spec, const FinitaryAssembly& fin) {
  const PointSet all = full_set(spec.points.size());
  std::set<PointSet> basic;
  for (PointSet a : spec.phi_plus)
    for (PointSet c : spec.phi_plus)
      for (PointSet a2 : spec.phi_minus)
        for (PointSet c2 : spec.phi_minus) basic.insert((all & ~a) | c | (all & ~a2) | c2);
  std::set<PointSet> closed{all};
  std::vector<PointSet> frontier{all};
  while (!frontier.empty()) {
    PointSet s = frontier.back();
    frontier.pop_back();
    for (PointSet t : basic)
      if (closed.insert(s & t).second) frontier.push_back(s & t);
  }
  BisoberFamily out;
  out.by_sets.assign(closed.begin(), closed.end());
  std::vector<PointSet> q;
  for (const auto& c : fin.family.congruences) q.push_back(quotient_spectrum(spec, c));
  out.by_quotients = distinct(q);
  (void)b;
  return out;
}

SkulaClosedReport skula_closed_sets(const Biframe& b, const Bispectrum& spec, const FinitaryAssembly& fin) {
  SkulaClosedReport r;
  const FiniteFrame& l = b.main();
  const std::size_t n = spec.points.size();
  FiniteBispace cf = skula_variant(spec.space, SkulaVariant::cf);
  FiniteBispace pm = skula_variant(spec.space, SkulaVariant::pm);

  std::vector<PointSet> closed;
  for (Elem z = 0; z < l.size(); ++z) closed.push_back(quotient_spectrum(spec, nabla(l, z)));
  r.cf_plus = distinct(closed) == complements(n, cf.opens_plus());

  std::vector<PointSet> fitted;
  for (const auto& c : fin.family.congruences) {
    std::vector<Congruence> parts;
    for (Elem x = 0; x < b.plus().size(); ++x)
      for (Elem y = 0; y < b.minus().size(); ++y) {
        Congruence d = delta(l, l.join(b.e_plus()(x), b.e_minus()(y)));
        if (d.subset_of(c)) parts.push_back(std::move(d));
      }
    if (join_all(l, parts) == c) fitted.push_back(quotient_spectrum(spec, c));
  }
  r.cf_minus = distinct(fitted) == complements(n, cf.opens_minus());

  for (Side s : {Side::plus, Side::minus}) {
    std::vector<PointSet> induced;
    for (const auto& c : assembly_frame(b.side(s)).family.congruences)
      induced.push_back(quotient_spectrum(spec, side_congruence(b, s, c)));
    const FiniteBispace& target = pm;
    bool ok = distinct(induced) == complements(n, s == Side::plus ? target.opens_plus() : target.opens_minus());
    (s == Side::plus ? r.pm_plus : r.pm_minus) = ok;
  }
  if (!r.cf_plus) r.failure = "cf positive closed sets differ from the spectra of closed congruences";
  else if (!r.cf_minus) r.failure = "cf negative closed sets differ from the spectra of finitary fitted congruences";
  else if (!r.pm_plus) r.failure = "pm positive closed sets differ from the spectra of positive congruences";
  else if (!r.pm_minus) r.failure = "pm negative closed sets differ from the spectra of negative congruences";
  return r;
}

SkulaVariant skula_for(Variant v) {
  switch (v) {
    case Variant::plain: return SkulaVariant::sk;
    case Variant::cf: return SkulaVariant::cf;
    case Variant::pm: return SkulaVariant::pm;
  }
  return SkulaVariant::sk;
}

std::vector<Elem> lifted_point(const FrameHom& f, const FinitaryAssembly& fin, const Biframe& b) {
  const FiniteFrame& af = fin.frame();
  std::set<std::pair<Elem, Elem>> closed, open;
  for (Elem u = 0; u < b.plus().size(); ++u)
    for (Elem u2 = 0; u2 < b.minus().size(); ++u2) {
      Elem fu = f(b.e_plus()(u)), fu2 = f(b.e_minus()(u2));
      closed.emplace(af.meet(fin.nabla_plus[u], fin.nabla_minus[u2]), Elem(fu & fu2));
      open.emplace(af.meet(fin.delta_plus[u], fin.delta_minus[u2]), Elem((1 - fu) & (1 - fu2)));
    }
  std::vector<Elem> image(af.size(), 0);
  for (auto [gc, vc] : closed)
    for (auto [go, vo] : open) {
      if (!(vc & vo)) continue;
      Elem g = af.meet(gc, go);
      for (Elem c = 0; c < af.size(); ++c)
        if (af.leq(g, c)) image[c] = 1;
    }
  return image;
}

BijectionReport spectrum_bijection(const Biframe& b, const Bispectrum& spec, const AssemblyResult& a,
                                   const Bispectrum& assembly_spec) {
  BijectionReport r;
  const FinitaryAssembly& fin = a.fin;
  const std::size_t n = spec.points.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> img = lifted_point(spec.points[i], fin, b);
    // f̃(C) = ⊤ exactly when f does not factor through C
    for (Elem c = 0; c < img.size(); ++c) {
      bool factors = quotient_spectrum(spec, fin.congruence(c)) >> i & 1;
      if (img[c] != (factors ? 0 : 1)) {
        r.failure = "lift of point " + std::to_string(i) + " disagrees with the factorisation test at C" +
                    std::to_string(c);
        return r;
      }
    }
    auto it = std::find_if(assembly_spec.points.begin(), assembly_spec.points.end(),
                           [&](const FrameHom& g) { return g.image() == img; });
    if (it == assembly_spec.points.end()) {
      r.failure = "lift of point " + std::to_string(i) + " is not a point of the assembly";
      return r;
    }
    r.map.push_back(std::size_t(it - assembly_spec.points.begin()));
  }
  auto sorted_map = r.map;
  std::sort(sorted_map.begin(), sorted_map.end());
  r.bijective = assembly_spec.points.size() == n &&
                std::adjacent_find(sorted_map.begin(), sorted_map.end()) == sorted_map.end();
  if (!r.bijective) {
    r.failure = "lift is not a bijection of point sets";
    return r;
  }

  const PointSet all = full_set(n);
  r.subbasis_match = true;
  for (Side s : {Side::plus, Side::minus})
    for (Elem x = 0; x < b.side(s).size(); ++x) {
      PointSet open = spec.phi(s)[x];
      if (transport(open, r.map) != assembly_spec.phi_main[fin.nabla(s)[x]] ||
          transport(all & ~open, r.map) != assembly_spec.phi_main[fin.delta(s)[x]]) {
        r.subbasis_match = false;
        r.failure = "subbasic open of side element " + std::to_string(x) + " is not carried to its generator";
      }
    }

  FiniteBispace sk = skula_variant(spec.space, skula_for(a.variant));
  r.bihomeomorphic = transport(sk.opens_plus(), r.map) == assembly_spec.space.opens_plus() &&
                     transport(sk.opens_minus(), r.map) == assembly_spec.space.opens_minus();
  if (!r.bihomeomorphic && r.failure.empty()) r.failure = "topologies are not carried onto each other";
  return r;
}

NaturalityReport naturality_check(const BiframeMap& f, const AssemblyResult& source, const AssemblyResult& target) {
  NaturalityReport r;
  BiframeMap af = assembly_map(f, source, target);
  const FiniteFrame two = two_frame();
  for (const FrameHom& g : frame_points(f.target().main())) {
    ++r.points_checked;
    std::vector<Elem> lhs = lifted_point(compose(g, f.main()), source.fin, f.source());
    std::vector<Elem> lg = lifted_point(g, target.fin, f.target());
    std::vector<Elem> rhs(source.main().size());
    for (Elem c = 0; c < rhs.size(); ++c) rhs[c] = lg[af.main()(c)];
    if (lhs != rhs) {
      r.ok = false;
      r.failure = "square fails at point " + std::to_string(r.points_checked - 1);
      return r;
    }
  }
  return r;
}

}  // namespace frm
