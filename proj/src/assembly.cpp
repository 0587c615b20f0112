#include "frm/assembly.hpp"

#include <algorithm>
#include <set>

#include "frm/error.hpp"

namespace frm {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::cf: return "cf";
    case Variant::pm: return "pm";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "plain") return Variant::plain;
  if (name == "cf") return Variant::cf;
  if (name == "pm") return Variant::pm;
  return std::nullopt;
}

AssemblyResult assembly(const Biframe& b, Variant v, std::size_t cap) {
  return assembly(b, finitary_assembly(b, cap), v);
}

AssemblyResult assembly(const Biframe& b, const FinitaryAssembly& fin, Variant v) {
  std::vector<Elem> plus, minus;
  auto append = [](std::vector<Elem>& to, const std::vector<Elem>& from) { to.insert(to.end(), from.begin(), from.end()); };
  switch (v) {
    case Variant::plain:
      append(plus, fin.nabla_plus);
      append(plus, fin.delta_minus);
      append(minus, fin.nabla_minus);
      append(minus, fin.delta_plus);
      break;
    case Variant::cf:
      append(plus, fin.nabla_plus);
      append(plus, fin.nabla_minus);
      for (Elem x = 0; x < b.plus().size(); ++x)
        for (Elem y = 0; y < b.minus().size(); ++y)
          minus.push_back(fin.family.at(delta(b.main(), b.main().join(b.e_plus()(x), b.e_minus()(y)))));
      break;
    case Variant::pm:
      append(plus, fin.nabla_plus);
      append(plus, fin.delta_plus);
      append(minus, fin.nabla_minus);
      append(minus, fin.delta_minus);
      break;
  }
  for (auto* g : {&plus, &minus}) {
    std::sort(g->begin(), g->end());
    g->erase(std::unique(g->begin(), g->end()), g->end());
  }
  Subframe ps = generated_subframe(fin.frame(), plus);
  Subframe ms = generated_subframe(fin.frame(), minus);
  Biframe out(ps.inclusion, ms.inclusion);
  return AssemblyResult{v, fin, std::move(out), std::move(plus), std::move(minus), std::move(ps), std::move(ms)};
}

BiframeMap nabla_unit(const Biframe& b, const AssemblyResult& a) {
  FrameHom main(b.main(), a.main(), a.fin.nabla_main);
  return BiframeMap::from_main(b, a.biframe, main);
}

BiframeMap assembly_map(const BiframeMap& f, const AssemblyResult& source, const AssemblyResult& target) {
  const FiniteFrame& l = f.source().main();
  const FiniteFrame& m = f.target().main();
  if (!(source.fin.family.base == l) || !(target.fin.family.base == m))
    throw Error(ErrorKind::BadInput, "assemblies do not belong to the map's source and target");
  std::vector<Elem> image(source.main().size());
  for (Elem i = 0; i < image.size(); ++i) {
    const Congruence& c = source.congruence(i);
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem x = 0; x < l.size(); ++x) pairs.emplace_back(f.main()(x), f.main()(c.top_of(x)));
    Congruence pushed = generate_congruence(m, pairs);

    std::vector<Congruence> pieces;
    for (Elem x = 0; x < l.size(); ++x)
      for (Elem y = 0; y < l.size(); ++y)
        if (c.related(x, l.meet(x, y))) pieces.push_back(meet(m, nabla(m, f.main()(x)), delta(m, f.main()(y))));
    if (!(join_all(m, pieces) == pushed))
      throw Error(ErrorKind::NotWellDefined,
                  "generator image of congruence " + std::to_string(i) + " differs from its direct image", {i});
    auto idx = target.fin.family.index_of(pushed);
    if (!idx)
      throw Error(ErrorKind::NotWellDefined, "image of congruence " + std::to_string(i) + " is not finitary", {i});
    image[i] = *idx;
  }
  if (auto bad = hom_violation(source.main(), target.main(), image))
    throw Error(ErrorKind::NotWellDefined, "assembly map is not a frame hom", {bad->first, bad->second});
  try {
    return BiframeMap::from_main(source.biframe, target.biframe, FrameHom(source.main(), target.main(), image));
  } catch (const Error& e) {
    throw Error(ErrorKind::NotWellDefined, std::string("assembly map does not preserve sides: ") + e.what(),
                e.witness());
  }
}

namespace {

struct Stage {
  FilterCompletion filt;
  Quotient q;
  FrameHom from_side;    // L → Q
  FrameHom from_filter;  // Filt(L) → Q
  FrameHom to_assembly;  // Q → A_fin, induced by a ↦ ∇(e a), ↑a ↦ Δ(e a)
};

// Factors h through the surjection q, or returns nullopt when h does not
// respect the kernel of q.
std::optional<std::vector<Elem>> factor(const FrameHom& q, const FrameHom& h) {
  std::vector<int> image(q.target().size(), -1);
  for (Elem x = 0; x < q.source().size(); ++x) {
    int& slot = image[q(x)];
    if (slot >= 0 && slot != h(x)) return std::nullopt;
    slot = h(x);
  }
  return std::vector<Elem>(image.begin(), image.end());
}

Stage complement_stage(const Biframe& b, const AssemblyResult& a, Side side, std::size_t cap) {
  const FiniteFrame& l = b.side(side);
  FilterCompletion filt = filter_completion(l);
  Coproduct p = coproduct(l, filt.frame, cap);
  std::vector<Seed> com;
  for (Elem x = 0; x < l.size(); ++x) {
    Elem u = p.inj_left(x), v = p.inj_right(filt.unit[x]);
    com.push_back({p.frame.meet(u, v), p.frame.bottom(), SeedMode::equate});
    com.push_back({p.frame.join(u, v), p.frame.top(), SeedMode::equate});
  }
  Quotient q = quotient_frame(p.frame, congruence_closure(p.frame, com));
  FrameHom from_side = compose(q.q, p.inj_left);
  FrameHom from_filter = compose(q.q, p.inj_right);

  std::vector<Elem> nab(a.fin.nabla(side)), del(filt.frame.size());
  for (Elem x = 0; x < l.size(); ++x) del[filt.unit[x]] = a.fin.delta(side)[x];
  FrameHom h = p.copair(FrameHom(l, a.main(), nab), FrameHom(filt.frame, a.main(), del));
  auto induced = factor(q.q, h);
  if (!induced) throw Error(ErrorKind::NotWellDefined, "complementation relations are not respected by ∇/Δ");
  FrameHom to_assembly(q.frame, a.main(), *induced);
  return Stage{std::move(filt), std::move(q), std::move(from_side), std::move(from_filter), std::move(to_assembly)};
}

}  // namespace

PresentationReport presentation_check(const Biframe& b, const AssemblyResult& a, std::size_t side_cap,
                                      std::size_t cap) {
  if (b.plus().size() > side_cap || b.minus().size() > side_cap)
    throw Error(ErrorKind::SizeLimitExceeded,
                "presentation check limited to sides with at most " + std::to_string(side_cap) + " elements",
                {b.plus().size(), b.minus().size()});
  PresentationReport report;
  auto fail = [&](std::string why) {
    report.ok = false;
    report.failure = std::move(why);
    return report;
  };

  Stage sp = complement_stage(b, a, Side::plus, cap);
  Stage sm = complement_stage(b, a, Side::minus, cap);
  Coproduct k = coproduct(sp.q.frame, sm.q.frame, cap);

  // push C_L from L⁺ ⊕ L⁻ into K
  Coproduct k0 = coproduct(b.plus(), b.minus(), cap);
  Congruence c_l = Congruence::kernel(k0.copair(b.e_plus(), b.e_minus()));
  FrameHom push = k0.copair(compose(k.inj_left, sp.from_side), compose(k.inj_right, sm.from_side));
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < k0.frame.size(); ++x) pairs.emplace_back(push(x), push(c_l.top_of(x)));
  Quotient presented = quotient_frame(k.frame, generate_congruence(k.frame, pairs));
  report.presented_size = presented.frame.size();

  FrameHom psi_k = k.copair(sp.to_assembly, sm.to_assembly);
  auto psi = factor(presented.q, psi_k);
  if (!psi) return fail("C_L is not respected by the generator assignment");
  report.iso = *psi;
  FrameHom iso(presented.frame, a.main(), *psi);
  if (!iso.injective() || !iso.surjective()) return fail("presented frame is not isomorphic to A_fin");

  // generator images inside the presented frame
  auto side_gen = [&](Side s) {
    std::vector<Elem> out;
    const Stage& st = s == Side::plus ? sp : sm;
    const FrameHom& inj = s == Side::plus ? k.inj_left : k.inj_right;
    for (Elem x = 0; x < b.side(s).size(); ++x) out.push_back(presented.q(inj(st.from_side(x))));
    return out;
  };
  auto filt_gen = [&](Side s) {
    std::vector<Elem> out;
    const Stage& st = s == Side::plus ? sp : sm;
    const FrameHom& inj = s == Side::plus ? k.inj_left : k.inj_right;
    for (Elem x = 0; x < b.side(s).size(); ++x) out.push_back(presented.q(inj(st.from_filter(st.filt.unit[x]))));
    return out;
  };
  auto concat = [](std::vector<Elem> x, const std::vector<Elem>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
  };
  std::vector<Elem> gp, gm;
  switch (a.variant) {
    case Variant::plain:
      gp = concat(side_gen(Side::plus), filt_gen(Side::minus));
      gm = concat(side_gen(Side::minus), filt_gen(Side::plus));
      break;
    case Variant::cf:
      gp = concat(side_gen(Side::plus), side_gen(Side::minus));
      gm = concat(filt_gen(Side::plus), filt_gen(Side::minus));
      break;
    case Variant::pm:
      gp = concat(side_gen(Side::plus), filt_gen(Side::plus));
      gm = concat(side_gen(Side::minus), filt_gen(Side::minus));
      break;
  }
  auto carried = [&](const std::vector<Elem>& gens, const Subframe& target) {
    std::vector<Elem> img;
    for (Elem x : generated_subframe(presented.frame, gens).members) img.push_back(iso(x));
    std::sort(img.begin(), img.end());
    return img == target.members;
  };
  if (!carried(gp, a.plus_side)) return fail("positive side of the presentation does not match");
  if (!carried(gm, a.minus_side)) return fail("negative side of the presentation does not match");
  report.ok = true;
  return report;
}

MediatingMap universal_property_check(const BiframeMap& f, const AssemblyResult& a) {
  if (a.variant != Variant::plain) throw Error(ErrorKind::BadInput, "the universal property concerns the plain assembly");
  const Biframe& src = f.source();
  const Biframe& m = f.target();
  const FiniteFrame& mm = m.main();
  for (Side s : {Side::plus, Side::minus})
    for (Elem x = 0; x < src.side(s).size(); ++x) {
      Elem fx = (s == Side::plus ? f.plus() : f.minus())(x);
      if (!bipseudocomplement(m, fx, s).is_bicomplement)
        throw Error(ErrorKind::PreconditionViolated,
                    std::string("image of ") + (s == Side::plus ? "positive" : "negative") + " element " +
                        std::to_string(x) + " has no bicomplement",
                    {x});
    }

  // forced values on ∇ generators; complement candidates on Δ generators
  struct Slot {
    Elem generator;
    std::vector<Elem> candidates;
  };
  std::vector<std::pair<Elem, Elem>> forced;
  std::vector<Slot> slots;
  for (Side s : {Side::plus, Side::minus}) {
    const Side other = s == Side::plus ? Side::minus : Side::plus;
    for (Elem x = 0; x < src.side(s).size(); ++x) {
      Elem v = f.main()(src.embed(s)(x));
      forced.emplace_back(a.fin.nabla(s)[x], v);
      Slot slot{a.fin.delta(s)[x], {}};
      for (Elem y = 0; y < m.side(other).size(); ++y) {
        Elem c = m.embed(other)(y);
        if (mm.meet(c, v) == mm.bottom() && mm.join(c, v) == mm.top()) slot.candidates.push_back(c);
      }
      slots.push_back(std::move(slot));
    }
  }

  // g is determined by its values on the generator meets
  // ∇(e⁺u)∩∇(e⁻u′)∩Δ(e⁺w)∩Δ(e⁻w′); closed and open halves are deduplicated
  // by (element of A_fin, value in M) before they are combined.
  const FiniteFrame& af = a.main();
  const std::size_t np = src.plus().size(), nm = src.minus().size();
  std::optional<BiframeMap> found;
  std::size_t tried = 0, successes = 0;
  std::vector<std::size_t> choice(slots.size(), 0);
  std::set<std::pair<Elem, Elem>> closed_parts;
  for (Elem u = 0; u < np; ++u)
    for (Elem u2 = 0; u2 < nm; ++u2)
      closed_parts.emplace(af.meet(a.fin.nabla_plus[u], a.fin.nabla_minus[u2]),
                           mm.meet(forced[u].second, forced[np + u2].second));
  auto attempt = [&]() {
    ++tried;
    std::vector<Elem> assigned(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) assigned[i] = slots[i].candidates[choice[i]];
    std::set<std::pair<Elem, Elem>> open_parts;
    for (Elem w = 0; w < np; ++w)
      for (Elem w2 = 0; w2 < nm; ++w2)
        open_parts.emplace(af.meet(a.fin.delta_plus[w], a.fin.delta_minus[w2]), mm.meet(assigned[w], assigned[np + w2]));
    std::vector<Elem> image(af.size(), mm.bottom());
    for (auto [gc, vc] : closed_parts)
      for (auto [go, vo] : open_parts) {
        Elem g = af.meet(gc, go), v = mm.meet(vc, vo);
        for (Elem c = 0; c < af.size(); ++c)
          if (af.leq(g, c)) image[c] = mm.join(image[c], v);
      }
    if (hom_violation(af, mm, image)) return;
    for (auto [g, v] : forced)
      if (image[g] != v) return;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (image[slots[i].generator] != assigned[i]) return;
    for (Elem z = 0; z < src.main().size(); ++z)
      if (image[a.fin.nabla_main[z]] != f.main()(z)) return;
    try {
      BiframeMap g = BiframeMap::from_main(a.biframe, m, FrameHom(af, mm, image));
      ++successes;
      if (!found) found = std::move(g);
    } catch (const Error&) {
    }
  };
  for (const auto& s : slots)
    if (s.candidates.empty())
      throw Error(ErrorKind::NoMediatingMap, "a Δ generator has no complement candidate", {s.generator});
  // odometer over the candidate product
  while (true) {
    attempt();
    std::size_t i = 0;
    while (i < slots.size() && ++choice[i] == slots[i].candidates.size()) choice[i++] = 0;
    if (i == slots.size()) break;
  }
  if (successes == 0) throw Error(ErrorKind::NoMediatingMap, "no assignment extends to a biframe map");
  if (successes > 1)
    throw Error(ErrorKind::NonUniqueMediatingMap, std::to_string(successes) + " mediating maps found", {successes});
  return MediatingMap{std::move(*found), tried};
}

BiquotientLattice biquotient_lattice(const Biframe& b, const FinitaryAssembly& fin) {
  const FiniteFrame& af = fin.frame();
  const std::size_t n = af.size();
  OrderMatrix rev(n, std::vector<bool>(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) rev[i][j] = af.leq(j, i);
  BiquotientLattice out{FiniteFrame::from_order(rev), {}, std::vector<bool>(n), std::vector<bool>(n)};
  for (Elem i = 0; i < n; ++i) out.members.push_back(biquotient(b, fin.congruence(i)));
  for (Side s : {Side::plus, Side::minus})
    for (const auto& c : assembly_frame(b.side(s)).family.congruences) {
      Elem i = fin.family.at(side_congruence(b, s, c));
      (s == Side::plus ? out.positive : out.negative)[i] = true;
    }
  return out;
}

}  // namespace frm
