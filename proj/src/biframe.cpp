#include "frm/biframe.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "frm/error.hpp"

namespace frm {

namespace {

// Closure of `seeds` under binary join, ascending.
std::vector<Elem> join_closure(const FiniteFrame& frame, std::vector<Elem> seeds) {
  std::vector<bool> in(frame.size());
  std::vector<Elem> out;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      out.push_back(e);
    }
  };
  add(frame.bottom());
  for (Elem s : seeds) add(s);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(frame.join(out[i], out[j]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> generator_meets(const FiniteFrame& main, const FrameHom& ep, const FrameHom& em) {
  std::vector<Elem> out;
  for (Elem x = 0; x < ep.source().size(); ++x)
    for (Elem y = 0; y < em.source().size(); ++y) out.push_back(main.meet(ep(x), em(y)));
  return out;
}

FinitaryAnalysis analyse(const FiniteFrame& frame, const std::vector<Elem>& fin, const Congruence& c) {
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x : fin)
    for (Elem y : fin)
      if (x < y && c.related(x, y)) pairs.emplace_back(x, y);
  Congruence part = generate_congruence(frame, pairs);
  bool fin_ok = part == c;
  return FinitaryAnalysis{std::move(part), fin_ok};
}

std::vector<Elem> image_set(const FrameHom& f) {
  std::vector<Elem> out(f.image());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Biframe::Biframe(FrameHom embed_plus, FrameHom embed_minus)
    : e_plus_(std::move(embed_plus)), e_minus_(std::move(embed_minus)) {
  validate();
}

Biframe::Biframe(FiniteFrame plus, FiniteFrame minus, FiniteFrame main, std::vector<Elem> embed_plus,
                 std::vector<Elem> embed_minus)
    : e_plus_(plus, main, std::move(embed_plus)), e_minus_(minus, main, std::move(embed_minus)) {
  validate();
}

void Biframe::validate() const {
  if (!(e_plus_.target() == e_minus_.target()))
    throw Error(ErrorKind::BadInput, "embeddings have different targets");
  if (!e_plus_.injective()) throw Error(ErrorKind::NotInjective, "e+ is not injective");
  if (!e_minus_.injective()) throw Error(ErrorKind::NotInjective, "e- is not injective");
  std::vector<Elem> gens(e_plus_.image());
  gens.insert(gens.end(), e_minus_.image().begin(), e_minus_.image().end());
  Subframe s = generated_subframe(main(), gens);
  if (s.members.size() != main().size()) {
    std::size_t missing = 0;
    while (missing < s.members.size() && s.members[missing] == missing) ++missing;
    throw Error(ErrorKind::GenerationFails,
                "element " + std::to_string(missing) + " of main is not generated by the side images", {missing});
  }
}

Biframe validate_biframe(FiniteFrame plus, FiniteFrame minus, FiniteFrame main, std::vector<Elem> embed_plus,
                         std::vector<Elem> embed_minus) {
  return Biframe(std::move(plus), std::move(minus), std::move(main), std::move(embed_plus), std::move(embed_minus));
}

Biframe two_biframe() {
  FiniteFrame two = two_frame();
  return Biframe(two, two, two, {0, 1}, {0, 1});
}

Biframe sierpinski_biframe() {
  FiniteFrame c3 = chain(3);
  return Biframe(c3, two_frame(), c3, {0, 1, 2}, {0, 2});
}

std::optional<std::vector<Elem>> find_biframe_isomorphism(const Biframe& a, const Biframe& b) {
  if (a.plus().size() != b.plus().size() || a.minus().size() != b.minus().size()) return std::nullopt;
  const auto ip = image_set(b.e_plus()), im = image_set(b.e_minus());
  std::optional<std::vector<Elem>> found;
  for_each_isomorphism(a.main(), b.main(), [&](const std::vector<Elem>& iso) {
    auto carried = [&](const FrameHom& e, const std::vector<Elem>& target) {
      std::vector<Elem> img;
      for (Elem x : e.image()) img.push_back(iso[x]);
      std::sort(img.begin(), img.end());
      return img == target;
    };
    if (carried(a.e_plus(), ip) && carried(a.e_minus(), im)) {
      found = iso;
      return false;
    }
    return true;
  });
  return found;
}

BiframeMap::BiframeMap(Biframe source, Biframe target, FrameHom plus, FrameHom minus, FrameHom main)
    : source_(std::move(source)),
      target_(std::move(target)),
      plus_(std::move(plus)),
      minus_(std::move(minus)),
      main_(std::move(main)) {}

BiframeMap BiframeMap::from_main(const Biframe& source, const Biframe& target, const FrameHom& main) {
  if (!(main.source() == source.main()) || !(main.target() == target.main()))
    throw Error(ErrorKind::NotAHom, "main hom does not connect the two biframes");
  auto restrict = [&](Side s) {
    const FrameHom& es = source.embed(s);
    const FrameHom& et = target.embed(s);
    std::vector<Elem> inverse(target.main().size(), Elem(kMaxFrameSize));
    for (Elem y = 0; y < et.source().size(); ++y) inverse[et(y)] = y;
    std::vector<Elem> image(es.source().size());
    for (Elem x = 0; x < es.source().size(); ++x) {
      Elem v = inverse[main(es(x))];
      if (v == kMaxFrameSize)
        throw Error(ErrorKind::NotAHom,
                    std::string("main hom does not preserve the ") + (s == Side::plus ? "positive" : "negative") +
                        " side at " + std::to_string(x),
                    {x});
      image[x] = v;
    }
    return FrameHom(es.source(), et.source(), std::move(image));
  };
  FrameHom p = restrict(Side::plus), m = restrict(Side::minus);
  return BiframeMap(source, target, std::move(p), std::move(m), main);
}

BiframeMap BiframeMap::from_sides(const Biframe& source, const Biframe& target, const FrameHom& plus,
                                  const FrameHom& minus) {
  const FiniteFrame& s = source.main();
  const FiniteFrame& t = target.main();
  std::vector<Elem> image(s.size());
  for (Elem z = 0; z < s.size(); ++z) {
    Elem acc = t.bottom();
    for (Elem x = 0; x < source.plus().size(); ++x)
      for (Elem y = 0; y < source.minus().size(); ++y)
        if (s.leq(s.meet(source.e_plus()(x), source.e_minus()(y)), z))
          acc = t.join(acc, t.meet(target.e_plus()(plus(x)), target.e_minus()(minus(y))));
    image[z] = acc;
  }
  if (hom_violation(s, t, image))
    throw Error(ErrorKind::NotWellDefined, "side maps do not extend to a frame hom of the main components");
  FrameHom main(s, t, std::move(image));
  for (Elem x = 0; x < source.plus().size(); ++x)
    if (main(source.e_plus()(x)) != target.e_plus()(plus(x)))
      throw Error(ErrorKind::NotWellDefined, "extension does not commute with e+", {x});
  for (Elem y = 0; y < source.minus().size(); ++y)
    if (main(source.e_minus()(y)) != target.e_minus()(minus(y)))
      throw Error(ErrorKind::NotWellDefined, "extension does not commute with e-", {y});
  return BiframeMap(source, target, plus, minus, std::move(main));
}

BiframeMap BiframeMap::identity(const Biframe& b) {
  return BiframeMap(b, b, FrameHom::identity(b.plus()), FrameHom::identity(b.minus()),
                    FrameHom::identity(b.main()));
}

BiframeMap compose(const BiframeMap& g, const BiframeMap& f) {
  return BiframeMap::from_main(f.source(), g.target(), compose(g.main(), f.main()));
}

std::vector<Elem> fin_elements(const Biframe& b) {
  return join_closure(b.main(), generator_meets(b.main(), b.e_plus(), b.e_minus()));
}

FinitaryAnalysis finitary_analysis(const Biframe& b, const Congruence& c) {
  return analyse(b.main(), fin_elements(b), c);
}

FinitarinessReport is_finitary_biframe(const Biframe& b, std::size_t cap) {
  Coproduct k = coproduct(b.plus(), b.minus(), cap);
  FrameHom s = k.copair(b.e_plus(), b.e_minus());
  Congruence c_l = Congruence::kernel(s);
  auto fin = join_closure(k.frame, generator_meets(k.frame, k.inj_left, k.inj_right));
  FinitaryAnalysis analysis = analyse(k.frame, fin, c_l);

  const FiniteFrame& kf = k.frame;
  std::set<std::pair<Elem, Elem>> r;
  for (Elem a = 0; a < b.plus().size(); ++a)
    for (Elem a2 = 0; a2 < b.minus().size(); ++a2) {
      Elem lhs = kf.meet(k.inj_left(a), k.inj_right(a2));
      for (Elem c = 0; c < b.plus().size(); ++c)
        for (Elem c2 = 0; c2 < b.minus().size(); ++c2) {
          Elem rhs = kf.join(k.inj_left(c), k.inj_right(c2));
          if (!kf.leq(lhs, rhs) && b.main().leq(s(lhs), s(rhs))) r.emplace(lhs, rhs);
        }
    }
  std::vector<std::pair<Elem, Elem>> r_l(r.begin(), r.end());
  std::vector<Seed> seeds;
  for (auto [x, y] : r_l) seeds.push_back({x, y, SeedMode::force_leq});
  bool generates = congruence_closure(kf, seeds) == c_l;
  bool fin_ok = analysis.is_finitary;
  return FinitarinessReport{std::move(k), std::move(s), std::move(c_l), std::move(analysis),
                            std::move(r_l), generates, fin_ok};
}

BiquotientResult biquotient(const Biframe& b, const Congruence& c) {
  Quotient qt = quotient_frame(b.main(), c);
  auto side = [&](Side s) {
    FrameHom to_quotient = compose(qt.q, b.embed(s));
    auto members = image_set(to_quotient);
    Subframe sub = generated_subframe(qt.frame, members);
    std::vector<Elem> image(b.side(s).size());
    for (Elem x = 0; x < image.size(); ++x) image[x] = *sub.index_of(to_quotient(x));
    return std::pair{sub, FrameHom(b.side(s), sub.frame, std::move(image))};
  };
  auto [sp, mp] = side(Side::plus);
  auto [sm, mm] = side(Side::minus);
  Biframe out(sp.inclusion, sm.inclusion);
  bool fin = finitary_analysis(b, c).is_finitary;
  bool degenerate = qt.degenerate;
  return BiquotientResult{std::move(out), std::move(qt), std::move(mp), std::move(mm), fin, degenerate};
}

bool biquotient_leq(const Congruence& c, const Congruence& d) { return d.subset_of(c); }

Bipseudocomplement bipseudocomplement(const Biframe& b, Elem x, Side side) {
  const Side other = side == Side::plus ? Side::minus : Side::plus;
  const FiniteFrame& main = b.main();
  const FiniteFrame& opp = b.side(other);
  const Elem ex = b.embed(side)(x);
  Elem acc = opp.bottom();
  for (Elem y = 0; y < opp.size(); ++y)
    if (main.meet(ex, b.embed(other)(y)) == main.bottom()) acc = opp.join(acc, y);
  bool bicomplement = main.join(ex, b.embed(other)(acc)) == main.top();
  return Bipseudocomplement{acc, bicomplement};
}

Congruence side_congruence(const Biframe& b, Side side, const Congruence& c_side) {
  const FiniteFrame& l = b.side(side);
  const FrameHom& e = b.embed(side);
  std::vector<Seed> seeds;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem c = 0; c < l.size(); ++c)
      if (c_side.related(l.meet(a, c), a)) seeds.push_back({e(a), e(c), SeedMode::force_leq});
  return congruence_closure(b.main(), seeds);
}

FinitaryAssembly finitary_assembly(const Biframe& b, std::size_t cap) {
  const FiniteFrame& main = b.main();
  std::vector<Congruence> np, dp, nm, dm;
  for (Elem x = 0; x < b.plus().size(); ++x) {
    np.push_back(nabla(main, b.e_plus()(x)));
    dp.push_back(delta(main, b.e_plus()(x)));
  }
  for (Elem y = 0; y < b.minus().size(); ++y) {
    nm.push_back(nabla(main, b.e_minus()(y)));
    dm.push_back(delta(main, b.e_minus()(y)));
  }
  // ∇(e⁺a) ∩ ∇(e⁻a′) and Δ(e⁺b) ∩ Δ(e⁻b′) are deduplicated before the
  // four-fold intersections are formed.
  auto distinct_meets = [&](const std::vector<Congruence>& xs, const std::vector<Congruence>& ys) {
    std::vector<Congruence> out;
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& x : xs)
      for (const auto& y : ys) {
        Congruence g = meet(main, x, y);
        if (seen.insert(g.class_ids()).second) out.push_back(std::move(g));
      }
    return out;
  };
  std::vector<Congruence> gens = distinct_meets(distinct_meets(np, nm), distinct_meets(dp, dm));
  FinitaryAssembly out{congruence_frame(main, gens, cap), {}, {}, {}, {}, {}, {}};
  for (std::size_t x = 0; x < np.size(); ++x) {
    out.nabla_plus.push_back(out.family.at(np[x]));
    out.delta_plus.push_back(out.family.at(dp[x]));
  }
  for (std::size_t y = 0; y < nm.size(); ++y) {
    out.nabla_minus.push_back(out.family.at(nm[y]));
    out.delta_minus.push_back(out.family.at(dm[y]));
  }
  for (Elem z = 0; z < main.size(); ++z) {
    auto n = out.family.index_of(nabla(main, z));
    auto d = out.family.index_of(delta(main, z));
    if (!n || !d)
      throw Error(ErrorKind::PreconditionViolated,
                  "principal congruence of main element " + std::to_string(z) + " is not finitary", {z});
    out.nabla_main.push_back(*n);
    out.delta_main.push_back(*d);
  }
  return out;
}

std::vector<Congruence> finitary_assembly_by_subframe(const Biframe& b, std::size_t cap) {
  const FiniteFrame& main = b.main();
  std::vector<Congruence> family;
  std::set<std::vector<std::uint32_t>> seen;
  auto add = [&](Congruence c) {
    if (seen.insert(c.class_ids()).second) {
      family.push_back(std::move(c));
      if (family.size() > cap) throw Error(ErrorKind::SizeLimitExceeded, "finitary assembly too large");
    }
  };
  add(Congruence::diagonal(main));
  add(Congruence::all(main));
  for (Side s : {Side::plus, Side::minus})
    for (Elem x = 0; x < b.side(s).size(); ++x) {
      add(nabla(main, b.embed(s)(x)));
      add(delta(main, b.embed(s)(x)));
    }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      add(meet(main, family[i], family[j]));
      add(join(main, family[i], family[j]));
    }
  std::sort(family.begin(), family.end());
  return family;
}

}  // namespace frm
