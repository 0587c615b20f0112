#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "frm/error.hpp"
#include "frm/spectra.hpp"

using namespace frm;

namespace {

constexpr Variant kVariants[] = {Variant::plain, Variant::cf, Variant::pm};

// Opens of the topology with subbasis `sub`: unions of finite intersections.
Family topology_oracle(std::size_t n, const std::vector<PointSet>& sub) {
  const PointSet all = (PointSet{1} << n) - 1;
  std::vector<PointSet> basis;
  for (std::size_t pick = 0; pick < (std::size_t{1} << sub.size()); ++pick) {
    PointSet s = all;
    for (std::size_t k = 0; k < sub.size(); ++k)
      if (pick >> k & 1) s &= sub[k];
    basis.push_back(s);
  }
  Family out;
  for (PointSet u = 0; u <= all; ++u) {
    PointSet cover = 0;
    for (PointSet bset : basis)
      if ((bset & ~u) == 0) cover |= bset;
    if (cover == u) out.push_back(u);
  }
  return out;
}

// f factors through C iff f is constant on every C-class.
PointSet factoring_points(const Bispectrum& spec, const Congruence& c) {
  PointSet s = 0;
  for (std::size_t i = 0; i < spec.points.size(); ++i) {
    bool ok = true;
    for (const auto& cls : c.classes())
      for (Elem x : cls) ok = ok && spec.points[i](x) == spec.points[i](cls.front());
    if (ok) s |= PointSet{1} << i;
  }
  return s;
}

}  // namespace

TEST(Bispace, GeneratedTopologyMatchesUnionsOfIntersections) {
  EXPECT_EQ(generate_topology(3, std::vector<PointSet>{0b001, 0b010}), (Family{0, 1, 2, 3, 7}));
  std::vector<std::vector<PointSet>> cases{{0b0011, 0b0110}, {0b1000, 0b0111, 0b0101}, {0b10101, 0b00110}, {}};
  std::size_t n[] = {4, 4, 5, 3};
  for (std::size_t i = 0; i < cases.size(); ++i)
    EXPECT_EQ(generate_topology(n[i], cases[i]), topology_oracle(n[i], cases[i]));
}

TEST(Bispace, RejectsNonTopologies) {
  EXPECT_THROW(FiniteBispace(2, Family{0, 1, 2}, Family{0, 3}), Error);
  EXPECT_THROW(FiniteBispace(2, Family{1, 3}, Family{0, 3}), Error);
  EXPECT_NO_THROW(FiniteBispace(2, Family{0, 1, 3}, Family{0, 3}));
}

TEST(Bispace, SkulaVariantsShareThePatch) {
  for (const auto& b : fixtures::small_biframes(4)) {
    Bispectrum spec = bpt(b);
    const FiniteBispace& x = spec.space;
    std::vector<PointSet> all_sub = join_families(join_families(x.opens_plus(), x.opens_minus()),
                                                  join_families(x.closed_plus(), x.closed_minus()));
    Family expected = topology_oracle(x.points(), all_sub);
    for (SkulaVariant v : {SkulaVariant::sk, SkulaVariant::cf, SkulaVariant::pm})
      EXPECT_EQ(skula_variant(x, v).patch(), expected);
  }
}

TEST(Spectra, SierpinskiValues) {
  Biframe bs = sierpinski_biframe();
  Bispectrum spec = bpt(bs);
  ASSERT_EQ(spec.points.size(), 2u);
  // point 1 sends the middle element to top
  EXPECT_EQ(spec.points[1](1), 1);
  EXPECT_EQ(spec.space.opens_plus(), (Family{0, 2, 3}));
  EXPECT_EQ(spec.space.opens_minus(), (Family{0, 3}));
  FiniteBispace sk = skula_variant(spec.space, SkulaVariant::sk);
  EXPECT_EQ(sk.opens_plus(), (Family{0, 2, 3}));
  EXPECT_EQ(sk.opens_minus(), (Family{0, 1, 3}));
  EXPECT_FALSE(pairwise_t1_space(spec.space));
  EXPECT_TRUE(pairwise_t1_space(sk));
  EXPECT_EQ(quotient_spectrum(spec, nabla(bs.main(), 1)), PointSet{1});
  EXPECT_EQ(quotient_spectrum(spec, delta(bs.main(), 1)), PointSet{2});
  auto fam = bisober_family(bs, spec, finitary_assembly(bs));
  EXPECT_EQ(fam.by_sets, (Family{0, 1, 2, 3}));
  EXPECT_TRUE(fam.agree());
}

TEST(Spectra, QuotientSpectrumIsFactoringPoints) {
  for (const auto& b : fixtures::small_biframes()) {
    Bispectrum spec = bpt(b);
    auto fin = finitary_assembly(b);
    for (const auto& c : fin.family.congruences) {
      EXPECT_EQ(quotient_spectrum(spec, c), factoring_points(spec, c));
      EXPECT_EQ(quotient_spectrum_mismatch(b, spec, c), "");
    }
  }
}

TEST(Spectra, FactsHoldOnFixtures) {
  for (const auto& b : fixtures::small_biframes()) {
    Bispectrum spec = bpt(b);
    auto r = spectra_facts(b, spec, finitary_assembly(b));
    EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
    // closed and open principal congruences, pointwise
    for (Elem z = 0; z < b.main().size(); ++z) {
      PointSet zero = 0, one = 0;
      for (std::size_t i = 0; i < spec.points.size(); ++i)
        (spec.points[i](z) ? one : zero) |= PointSet{1} << i;
      EXPECT_EQ(quotient_spectrum(spec, nabla(b.main(), z)), zero);
      EXPECT_EQ(quotient_spectrum(spec, delta(b.main(), z)), one);
    }
  }
}

TEST(Spectra, BisoberSetsArePatchClosed) {
  for (const auto& b : fixtures::small_biframes()) {
    Bispectrum spec = bpt(b);
    auto fam = bisober_family(b, spec, finitary_assembly(b));
    EXPECT_TRUE(fam.agree());
    FiniteBispace sk = skula_variant(spec.space, SkulaVariant::sk);
    EXPECT_EQ(fam.by_sets, complements(spec.space.points(), sk.patch()));
  }
}

TEST(Spectra, LiftedPointsAreFrameHoms) {
  for (const auto& b : fixtures::small_biframes(4)) {
    auto fin = finitary_assembly(b);
    Bispectrum spec = bpt(b);
    for (const auto& f : spec.points) {
      auto img = lifted_point(f, fin, b);
      EXPECT_FALSE(hom_violation(fin.frame(), two_frame(), img).has_value());
      for (Elem x = 0; x < b.plus().size(); ++x) {
        EXPECT_EQ(img[fin.nabla_plus[x]], f(b.e_plus()(x)));
        EXPECT_EQ(img[fin.delta_plus[x]], 1 - f(b.e_plus()(x)));
      }
    }
  }
}

TEST(Spectra, AssemblySpectrumIsSkulaVariant) {
  for (const auto& b : fixtures::small_biframes()) {
    Bispectrum spec = bpt(b);
    auto fin = finitary_assembly(b);
    for (Variant v : kVariants) {
      auto a = assembly(b, fin, v);
      auto r = spectrum_bijection(b, spec, a, bpt(a.biframe));
      EXPECT_TRUE(r.ok()) << to_string(v) << ": " << r.failure;
    }
  }
}

TEST(Spectra, SkulaVariantsByDirectTopology) {
  // cf: positive opens are generated by both open families; pm: by Ω⁺ and its closed sets
  for (const auto& b : fixtures::small_biframes(4)) {
    const FiniteBispace& x = bpt(b).space;
    auto cf = skula_variant(x, SkulaVariant::cf);
    auto pm = skula_variant(x, SkulaVariant::pm);
    EXPECT_EQ(cf.opens_plus(), topology_oracle(x.points(), join_families(x.opens_plus(), x.opens_minus())));
    EXPECT_EQ(cf.opens_minus(), topology_oracle(x.points(), join_families(x.closed_plus(), x.closed_minus())));
    EXPECT_EQ(pm.opens_plus(), topology_oracle(x.points(), join_families(x.opens_plus(), x.closed_plus())));
    EXPECT_EQ(pm.opens_minus(), topology_oracle(x.points(), join_families(x.opens_minus(), x.closed_minus())));
  }
}

TEST(Spectra, NaturalAlongQuotients) {
  std::size_t checked = 0;
  for (const auto& b : fixtures::small_biframes(4)) {
    auto fin = finitary_assembly(b);
    for (Variant v : kVariants) {
      auto a = assembly(b, fin, v);
      EXPECT_TRUE(naturality_check(BiframeMap::identity(b), a, a).ok);
      for (std::size_t i = 1; i < fin.family.congruences.size() && i < 4; ++i) {
        BiquotientResult q = biquotient(b, fin.family.congruences[i]);
        if (q.degenerate) continue;
        auto aq = assembly(q.biframe, v);
        auto r = naturality_check(BiframeMap::from_main(b, q.biframe, q.quotient.q), a, aq);
        EXPECT_TRUE(r.ok) << r.failure;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(Spectra, SkulaClosedSetsAreQuotientSpectra) {
  for (const auto& b : fixtures::small_biframes()) {
    auto r = skula_closed_sets(b, bpt(b), finitary_assembly(b));
    EXPECT_TRUE(r.ok()) << r.failure;
  }
  // two-point check by hand: cf positive closed sets of bpt(BS) are {∅, {h2}, X}
  Biframe bs = sierpinski_biframe();
  Bispectrum spec = bpt(bs);
  EXPECT_EQ(complements(2, skula_variant(spec.space, SkulaVariant::cf).opens_plus()), (Family{0, 1, 3}));
}
