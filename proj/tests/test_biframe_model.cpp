#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "frm/biframe.hpp"
#include "frm/error.hpp"

using namespace frm;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::BadInput;
}

// Every congruence via the generator route; that route is checked against
// partition enumeration in the congruence engine tests.
std::vector<Congruence> all_congruences(const FiniteFrame& l) { return assembly_frame(l).family.congruences; }

// Least congruence on main (by enumeration) satisfying every forced inequality.
Congruence least_forcing(const FiniteFrame& l, const std::vector<std::pair<Elem, Elem>>& leqs,
                         const std::vector<Congruence>& all) {
  const Congruence* best = nullptr;
  for (const auto& c : all) {
    bool ok = true;
    for (auto [x, y] : leqs) ok = ok && c.related(x, l.meet(x, y));
    if (ok && (!best || c.subset_of(*best))) best = &c;
  }
  return *best;
}

}  // namespace

TEST(Validate, Fixtures) {
  EXPECT_NO_THROW(sierpinski_biframe());
  EXPECT_NO_THROW(two_biframe());
  FiniteFrame two = two_frame(), c3 = chain(3);
  try {
    Biframe(two, two, c3, {0, 2}, {0, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GenerationFails);
    EXPECT_EQ(e.witness(), std::vector<std::size_t>{1});
  }
  EXPECT_EQ(kind_of([&] { Biframe(c3, two, two, {0, 0, 1}, {0, 1}); }), ErrorKind::NotInjective);
  EXPECT_EQ(kind_of([&] { Biframe(c3, two, c3, {0, 2, 1}, {0, 2}); }), ErrorKind::NotAHom);
}

TEST(Validate, RevalidationIsIdempotent) {
  for (const auto& b : fixtures::small_biframes()) {
    Biframe again(b.plus(), b.minus(), b.main(), b.e_plus().image(), b.e_minus().image());
    EXPECT_EQ(again, b);
  }
}

TEST(FinElements, EveryElementIsAFiniteJoinOfGeneratorMeets) {
  for (const auto& b : fixtures::small_biframes()) {
    auto fin = fin_elements(b);
    EXPECT_EQ(fin.size(), b.main().size());
    // oracle: z equals the join of the generator meets below it
    const auto& l = b.main();
    for (Elem z = 0; z < l.size(); ++z) {
      Elem acc = l.bottom();
      for (Elem x = 0; x < b.plus().size(); ++x)
        for (Elem y = 0; y < b.minus().size(); ++y) {
          Elem g = l.meet(b.e_plus()(x), b.e_minus()(y));
          if (l.leq(g, z)) acc = l.join(acc, g);
        }
      EXPECT_EQ(acc, z);
    }
  }
}

TEST(Finitary, AnalysisOnFixtures) {
  Biframe bs = sierpinski_biframe();
  const auto& l = bs.main();
  EXPECT_TRUE(finitary_analysis(bs, Congruence::diagonal(l)).is_finitary);
  EXPECT_TRUE(finitary_analysis(bs, nabla(l, 1)).is_finitary);
  for (const auto& b : fixtures::small_biframes(4))
    for (const auto& c : all_congruences(b.main())) {
      auto a = finitary_analysis(b, c);
      EXPECT_TRUE(a.is_finitary);
      EXPECT_EQ(a.fin_part, c);
    }
}

TEST(Finitary, BiframeFinitarinessViaPresentationKernel) {
  for (const auto& b : fixtures::small_biframes(4)) {
    auto r = is_finitary_biframe(b);
    EXPECT_TRUE(r.is_finitary);
    EXPECT_TRUE(r.r_l_generates);
    EXPECT_TRUE(r.surjection.surjective());
    for (Elem x = 0; x < r.presentation.frame.size(); ++x)
      for (Elem y = 0; y < r.presentation.frame.size(); ++y)
        EXPECT_EQ(r.c_l.related(x, y), r.surjection(x) == r.surjection(y));
  }
  auto two = is_finitary_biframe(two_biframe());
  EXPECT_TRUE(two.c_l.is_diagonal());
  EXPECT_TRUE(two.r_l.empty());
  auto bs = is_finitary_biframe(sierpinski_biframe());
  EXPECT_EQ(bs.presentation.frame.size(), 3u);
  EXPECT_TRUE(bs.c_l.is_diagonal());
}

TEST(Biquotient, Examples) {
  Biframe bs = sierpinski_biframe();
  const auto& l = bs.main();
  auto d = biquotient(bs, Congruence::diagonal(l));
  EXPECT_TRUE(find_biframe_isomorphism(d.biframe, bs).has_value());
  EXPECT_TRUE(d.biquotient);
  auto n = biquotient(bs, nabla(l, 1));
  EXPECT_TRUE(find_biframe_isomorphism(n.biframe, two_biframe()).has_value());
  auto a = biquotient(bs, Congruence::all(l));
  EXPECT_TRUE(a.degenerate);
  EXPECT_TRUE(a.biframe.degenerate());
  EXPECT_TRUE(biquotient_leq(Congruence::all(l), Congruence::diagonal(l)));
  EXPECT_FALSE(biquotient_leq(Congruence::diagonal(l), nabla(l, 1)));
}

TEST(Biquotient, QuotientIsFinitaryIffCongruenceIs) {
  for (const auto& b : fixtures::small_biframes(4))
    for (const auto& c : all_congruences(b.main())) {
      auto q = biquotient(b, c);
      EXPECT_EQ(q.biquotient, is_finitary_biframe(q.biframe).is_finitary);
      EXPECT_TRUE(q.plus.surjective());
      EXPECT_TRUE(q.minus.surjective());
      // the side maps commute with the quotient map
      for (Elem x = 0; x < b.plus().size(); ++x)
        EXPECT_EQ(q.biframe.e_plus()(q.plus(x)), q.quotient.q(b.e_plus()(x)));
    }
}

TEST(Bipseudocomplement, ExamplesAndBruteForce) {
  Biframe bs = sierpinski_biframe();
  auto bot = bipseudocomplement(bs, 0, Side::plus);
  EXPECT_EQ(bot.value, bs.minus().top());
  EXPECT_TRUE(bot.is_bicomplement);
  auto top = bipseudocomplement(bs, 2, Side::plus);
  EXPECT_EQ(top.value, bs.minus().bottom());
  auto m = bipseudocomplement(bs, 1, Side::plus);
  EXPECT_EQ(m.value, bs.minus().bottom());
  EXPECT_FALSE(m.is_bicomplement);

  for (const auto& b : fixtures::small_biframes())
    for (Side s : {Side::plus, Side::minus}) {
      Side o = s == Side::plus ? Side::minus : Side::plus;
      for (Elem x = 0; x < b.side(s).size(); ++x) {
        auto r = bipseudocomplement(b, x, s);
        EXPECT_EQ(b.main().meet(b.embed(s)(x), b.embed(o)(r.value)), b.main().bottom());
        for (Elem y = 0; y < b.side(o).size(); ++y)
          if (b.main().meet(b.embed(s)(x), b.embed(o)(y)) == b.main().bottom()) EXPECT_TRUE(b.side(o).leq(y, r.value));
      }
    }
}

TEST(SideCongruence, ExamplesAndOracle) {
  Biframe bs = sierpinski_biframe();
  EXPECT_TRUE(side_congruence(bs, Side::plus, Congruence::diagonal(bs.plus())).is_diagonal());
  Congruence all_plus = side_congruence(bs, Side::plus, Congruence::all(bs.plus()));
  EXPECT_EQ(all_plus, least_forcing(bs.main(), {{bs.e_plus()(2), bs.e_plus()(0)}}, all_congruences(bs.main())));

  for (const auto& b : fixtures::small_biframes(4))
    for (Side s : {Side::plus, Side::minus}) {
      const auto& l = b.side(s);
      auto fa = finitary_assembly(b);
      auto on_main = all_congruences(b.main());
      std::vector<Congruence> positives;
      for (const auto& cs : all_congruences(l)) {
        std::vector<std::pair<Elem, Elem>> leqs;
        for (Elem a = 0; a < l.size(); ++a)
          for (Elem c = 0; c < l.size(); ++c)
            if (cs.class_of(l.meet(a, c)) == cs.class_of(a)) leqs.emplace_back(b.embed(s)(a), b.embed(s)(c));
        Congruence sc = side_congruence(b, s, cs);
        EXPECT_EQ(sc, least_forcing(b.main(), leqs, on_main));
        EXPECT_TRUE(fa.family.index_of(sc).has_value());
        positives.push_back(sc);
      }
      // closed under joins and intersections
      for (const auto& x : positives)
        for (const auto& y : positives) {
          EXPECT_NE(std::find(positives.begin(), positives.end(), join(b.main(), x, y)), positives.end());
          EXPECT_NE(std::find(positives.begin(), positives.end(), meet(b.main(), x, y)), positives.end());
        }
    }
}

TEST(FinitaryAssembly, Examples) {
  auto two = finitary_assembly(two_biframe());
  EXPECT_TRUE(isomorphic(two.frame(), two_frame()));
  auto bs = finitary_assembly(sierpinski_biframe());
  EXPECT_EQ(bs.frame().size(), 4u);
  EXPECT_TRUE(isomorphic(bs.frame(), diamond()));
}

TEST(FinitaryAssembly, BothDescriptionsAgreeAndSitInsideTheFullAssembly) {
  for (const auto& b : fixtures::small_biframes()) {
    auto fa = finitary_assembly(b);
    EXPECT_EQ(fa.family.congruences, finitary_assembly_by_subframe(b));
    auto full = assembly_frame(b.main());
    for (Elem x = 0; x < fa.frame().size(); ++x)
      for (Elem y = 0; y < fa.frame().size(); ++y) {
        Elem fx = full.family.at(fa.congruence(x)), fy = full.family.at(fa.congruence(y));
        EXPECT_EQ(full.family.congruences[full.frame().meet(fx, fy)], fa.congruence(fa.frame().meet(x, y)));
        EXPECT_EQ(full.family.congruences[full.frame().join(fx, fy)], fa.congruence(fa.frame().join(x, y)));
      }
  }
}

TEST(FinitaryAssembly, EachMemberIsGeneratedByItsGeneratorInequalities) {
  for (const auto& b : fixtures::small_biframes(4)) {
    const auto& l = b.main();
    std::vector<Elem> meets, joins;
    for (Elem x = 0; x < b.plus().size(); ++x)
      for (Elem y = 0; y < b.minus().size(); ++y) {
        meets.push_back(l.meet(b.e_plus()(x), b.e_minus()(y)));
        joins.push_back(l.join(b.e_plus()(x), b.e_minus()(y)));
      }
    auto fa = finitary_assembly(b);
    for (const auto& c : fa.family.congruences) {
      std::vector<Seed> seeds;
      for (Elem u : meets)
        for (Elem v : joins)
          if (c.related(u, l.meet(u, v))) seeds.push_back({u, v, SeedMode::force_leq});
      EXPECT_EQ(congruence_closure(l, seeds), c);
    }
  }
}

TEST(Quotients, StagedQuotientMatchesSingleQuotient) {
  std::mt19937_64 rng(11);
  for (const auto& b : fixtures::small_biframes(4)) {
    const auto& l = b.main();
    auto all = all_congruences(l);
    for (int t = 0; t < 4; ++t) {
      const Congruence& c = all[rng() % all.size()];
      std::vector<std::pair<Elem, Elem>> r{{Elem(rng() % l.size()), Elem(rng() % l.size())}};
      Congruence cr = join(l, c, generate_congruence(l, r));
      Quotient first = quotient_frame(l, c);
      std::vector<std::pair<Elem, Elem>> pushed;
      for (auto [x, y] : r) pushed.emplace_back(first.q(x), first.q(y));
      Quotient second = quotient_frame(first.frame, generate_congruence(first.frame, pushed));
      EXPECT_EQ(canonical_form(quotient_frame(l, cr).frame), canonical_form(second.frame));
      EXPECT_EQ(Congruence::kernel(compose(second.q, first.q)), cr);
    }
  }
}

TEST(BiframeMap, FromMainAndFromSidesAgree) {
  for (const auto& b : fixtures::small_biframes(4)) {
    for (const auto& c : all_congruences(b.main())) {
      auto q = biquotient(b, c);
      BiframeMap f = BiframeMap::from_main(b, q.biframe, q.quotient.q);
      EXPECT_EQ(f.plus(), q.plus);
      EXPECT_EQ(f.minus(), q.minus);
      BiframeMap g = BiframeMap::from_sides(b, q.biframe, q.plus, q.minus);
      EXPECT_EQ(g.main(), q.quotient.q);
      EXPECT_EQ(compose(f, BiframeMap::identity(b)), f);
    }
  }
  Biframe bs = sierpinski_biframe();
  // the swap of the sides of (C3, C3, C3) is not a biframe map into BS
  EXPECT_THROW(BiframeMap::from_main(fixtures::identity_triple(chain(3), false, false), bs,
                                     FrameHom::identity(chain(3))),
               Error);
}
