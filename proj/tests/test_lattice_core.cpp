#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "frm/constructions.hpp"
#include "frm/enumeration.hpp"
#include "frm/error.hpp"
#include "frm/frame.hpp"
#include "frm/frame_hom.hpp"

using namespace frm;

namespace {

// ---- independent oracles (brute force over raw order matrices) ----

bool raw_leq_is_distributive_lattice(const OrderMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (m[a][b] && m[b][c] && !m[a][c]) return false;
  auto glb = [&](std::size_t a, std::size_t b) -> int {
    for (std::size_t c = 0; c < n; ++c) {
      if (!(m[c][a] && m[c][b])) continue;
      bool ok = true;
      for (std::size_t e = 0; e < n; ++e)
        if (m[e][a] && m[e][b] && !m[e][c]) ok = false;
      if (ok) return int(c);
    }
    return -1;
  };
  auto lub = [&](std::size_t a, std::size_t b) -> int {
    for (std::size_t c = 0; c < n; ++c) {
      if (!(m[a][c] && m[b][c])) continue;
      bool ok = true;
      for (std::size_t e = 0; e < n; ++e)
        if (m[a][e] && m[b][e] && !m[c][e]) ok = false;
      if (ok) return int(c);
    }
    return -1;
  };
  std::vector<int> mt(n * n), jn(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      mt[a * n + b] = glb(a, b);
      jn[a * n + b] = lub(a, b);
      if (mt[a * n + b] < 0 || jn[a * n + b] < 0) return false;
    }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mt[a * n + jn[b * n + c]] != jn[mt[a * n + b] * n + mt[a * n + c]]) return false;
  return true;
}

bool raw_isomorphic(const OrderMatrix& a, const OrderMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        if (a[i][j] != b[perm[i]][perm[j]]) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Distributive lattices with exactly n elements up to isomorphism, by brute
// force over upper-triangular order matrices (every poset has a linear extension).
std::vector<OrderMatrix> brute_force_lattices(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<OrderMatrix> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    OrderMatrix m(n, std::vector<bool>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) m[slots[s].first][slots[s].second] = true;
    if (!raw_leq_is_distributive_lattice(m)) continue;
    bool dup = false;
    for (const auto& r : reps)
      if (raw_isomorphic(r, m)) {
        dup = true;
        break;
      }
    if (!dup) reps.push_back(m);
  }
  return reps;
}

std::vector<std::vector<Elem>> brute_force_points(const FiniteFrame& l) {
  std::vector<std::vector<Elem>> out;
  const std::size_t n = l.size();
  FiniteFrame two = two_frame();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Elem> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = (mask >> i & 1) ? 1 : 0;
    if (!hom_violation(l, two, image)) out.push_back(image);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FiniteFrame> frames_up_to(std::size_t n) {
  auto all = enumerate_frames(n);
  return all;
}

}  // namespace

TEST(ValidateFrame, TwoChainIsSmallestFrame) {
  FiniteFrame f2 = validate_frame({{true, true}, {false, true}});
  EXPECT_EQ(f2.size(), 2u);
  EXPECT_EQ(f2.bottom(), 0);
  EXPECT_EQ(f2.top(), 1);
  EXPECT_FALSE(f2.degenerate());
}

TEST(ValidateFrame, BottomNeedNotBeIndexZero) {
  FiniteFrame f = validate_frame({{true, false}, {true, true}});
  EXPECT_EQ(f.bottom(), 1);
  EXPECT_EQ(f.top(), 0);
}

TEST(ValidateFrame, MissingTransitivityPairIsReportedWithWitness) {
  OrderMatrix m = {{true, true, false}, {false, true, true}, {false, false, true}};
  try {
    validate_frame(m);
    FAIL() << "expected NotAPartialOrder";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAPartialOrder);
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(ValidateFrame, M3IsNotDistributiveAndWitnessFailsTheLaw) {
  // 0 < a, b, c < 1, pairwise incomparable atoms
  OrderMatrix m(5, std::vector<bool>(5));
  for (std::size_t i = 0; i < 5; ++i) {
    m[i][i] = true;
    m[0][i] = true;
    m[i][4] = true;
  }
  try {
    validate_frame(m);
    FAIL() << "expected NotDistributive";
  } catch (const Error& e) {
    ASSERT_EQ(e.kind(), ErrorKind::NotDistributive);
    ASSERT_EQ(e.witness().size(), 3u);
    // oracle: meet/join of M3 computed by hand
    auto meet = [](std::size_t x, std::size_t y) -> std::size_t {
      if (x == y) return x;
      if (x == 4) return y;
      if (y == 4) return x;
      return 0;
    };
    auto join = [](std::size_t x, std::size_t y) -> std::size_t {
      if (x == y) return x;
      if (x == 0) return y;
      if (y == 0) return x;
      return 4;
    };
    auto a = e.witness()[0], b = e.witness()[1], c = e.witness()[2];
    EXPECT_NE(meet(a, join(b, c)), join(meet(a, b), meet(a, c)));
  }
  EXPECT_FALSE(raw_leq_is_distributive_lattice(m));
}

TEST(ValidateFrame, PentagonHasNoDistributivity) {
  // N5: 0 < a < b < 1, 0 < c < 1
  const bool t = true, f = false;
  OrderMatrix m = {{t, t, t, t, t}, {f, t, t, f, t}, {f, f, t, f, t}, {f, f, f, t, t}, {f, f, f, f, t}};
  EXPECT_THROW(
      {
        try {
          validate_frame(m);
        } catch (const Error& e) {
          EXPECT_EQ(e.kind(), ErrorKind::NotDistributive);
          throw;
        }
      },
      Error);
}

TEST(ValidateFrame, NonLatticeReportsNoBoundedLattice) {
  // two incomparable elements, no top
  EXPECT_THROW(validate_frame({{true, false}, {false, true}}), Error);
  const bool t = true, f = false;
  // 0 < a, b < c, d < (nothing above c and d jointly except 1) with a,b having two minimal upper bounds
  OrderMatrix bowtie = {{t, t, t, t, t, t}, {f, t, f, t, t, t}, {f, f, t, t, t, t},
                        {f, f, f, t, f, t}, {f, f, f, f, t, t}, {f, f, f, f, f, t}};
  try {
    validate_frame(bowtie);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoBoundedLattice);
    EXPECT_EQ(e.witness(), (std::vector<std::size_t>{1, 2}));
  }
}

TEST(Heyting, ChainExamples) {
  FiniteFrame c3 = chain(3);
  for (Elem x = 0; x < 3; ++x) EXPECT_EQ(heyting(c3, 0, x), 2);
  // oracle: maximise c with m ∧ c ≤ 0 over all c
  Elem best = 0;
  for (Elem c = 0; c < 3; ++c)
    if (c3.leq(c3.meet(1, c), 0) && c3.leq(best, c)) best = c;
  EXPECT_EQ(best, 0);
  EXPECT_EQ(heyting(c3, 1, 0), best);
}

TEST(Heyting, SelfImplicationIsTopAndAdjunctionHolds) {
  for (const auto& l : frames_up_to(8)) {
    for (Elem a = 0; a < l.size(); ++a) {
      EXPECT_EQ(l.implies(a, a), l.top());
      for (Elem b = 0; b < l.size(); ++b)
        for (Elem c = 0; c < l.size(); ++c)
          ASSERT_EQ(l.leq(l.meet(a, c), b), l.leq(c, l.implies(a, b)));
    }
  }
}

TEST(Coproduct, TwoIsInitial) {
  for (const auto& l : frames_up_to(6)) {
    if (l.degenerate()) continue;
    Coproduct cp = coproduct(two_frame(), l);
    EXPECT_EQ(cp.frame.size(), l.size());
    EXPECT_TRUE(cp.inj_right.injective());
    EXPECT_TRUE(cp.inj_right.surjective());
  }
}

TEST(Coproduct, ChainTimesChainHasSixElements) {
  FiniteFrame c3 = chain(3);
  Coproduct cp = coproduct(c3, c3);
  EXPECT_EQ(cp.frame.size(), 6u);
  EXPECT_EQ(cp.inj_left(c3.top()), cp.frame.top());
  EXPECT_EQ(cp.inj_right(c3.top()), cp.frame.top());

  // oracle: count C-ideals of C3 × C3 directly over all 2^9 subsets
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < 512; ++mask) {
    auto in = [&](int a, int b) { return (mask >> (a * 3 + b)) & 1; };
    bool ok = true;
    for (int a = 0; a < 3 && ok; ++a)
      for (int b = 0; b < 3 && ok; ++b) {
        if ((a == 0 || b == 0) && !in(a, b)) ok = false;
        if (in(a, b))
          for (int x = 0; x <= a; ++x)
            for (int y = 0; y <= b; ++y)
              if (!in(x, y)) ok = false;
        for (int b2 = 0; b2 < 3; ++b2)
          if (in(a, b) && in(a, b2) && !in(a, std::max(b, b2))) ok = false;
        for (int a2 = 0; a2 < 3; ++a2)
          if (in(a, b) && in(a2, b) && !in(std::max(a, a2), b)) ok = false;
      }
    if (ok) ++count;
  }
  EXPECT_EQ(count, 6u);
}

TEST(Coproduct, InjectionsAreInjectiveAndGenerate) {
  auto frames = frames_up_to(5);
  for (const auto& l : frames)
    for (const auto& m : frames) {
      if (l.degenerate() || m.degenerate()) continue;
      Coproduct cp = coproduct(l, m);
      EXPECT_TRUE(cp.inj_left.injective());
      EXPECT_TRUE(cp.inj_right.injective());
      for (Elem x = 0; x < cp.frame.size(); ++x) {
        Elem acc = cp.frame.bottom();
        for (Elem a = 0; a < l.size(); ++a)
          for (Elem b = 0; b < m.size(); ++b) {
            Elem piece = cp.frame.meet(cp.inj_left(a), cp.inj_right(b));
            if (cp.frame.leq(piece, x)) acc = cp.frame.join(acc, piece);
          }
        EXPECT_EQ(acc, x);
      }
    }
}

TEST(Coproduct, UniversalPropertyAgainstPoints) {
  // homs L ⊕ M → 2 correspond exactly to pairs of points, each via copair
  auto frames = frames_up_to(5);
  for (const auto& l : frames)
    for (const auto& m : frames) {
      if (l.degenerate() || m.degenerate()) continue;
      Coproduct cp = coproduct(l, m);
      auto pl = frame_points(l), pm = frame_points(m), pk = frame_points(cp.frame);
      ASSERT_EQ(pk.size(), pl.size() * pm.size());
      for (const auto& f : pl)
        for (const auto& g : pm) {
          FrameHom h = cp.copair(f, g);
          EXPECT_EQ(compose(h, cp.inj_left), f);
          EXPECT_EQ(compose(h, cp.inj_right), g);
          std::size_t matches = 0;
          for (const auto& k : pk)
            if (compose(k, cp.inj_left) == f && compose(k, cp.inj_right) == g) ++matches;
          EXPECT_EQ(matches, 1u);
        }
    }
}

TEST(Coproduct, CapIsEnforced) {
  EXPECT_THROW(coproduct(chain(5), chain(5), 10), Error);
}

TEST(FilterCompletion, SelfDualExamples) {
  EXPECT_TRUE(isomorphic(filter_completion(two_frame()).frame, two_frame()));
  EXPECT_TRUE(isomorphic(filter_completion(chain(3)).frame, chain(3)));
  EXPECT_TRUE(isomorphic(filter_completion(diamond()).frame, diamond()));
}

TEST(FilterCompletion, EveryFilterIsPrincipalAndOrderIsReversed) {
  for (const auto& l : frames_up_to(7)) {
    const std::size_t n = l.size();
    // oracle: enumerate all filters as subsets
    std::size_t filters = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      auto in = [&](std::size_t x) { return (mask >> x) & 1; };
      bool ok = in(l.top());
      for (std::size_t x = 0; x < n && ok; ++x)
        for (std::size_t y = 0; y < n && ok; ++y) {
          if (in(x) && l.leq(Elem(x), Elem(y)) && !in(y)) ok = false;
          if (in(x) && in(y) && !in(l.meet(Elem(x), Elem(y)))) ok = false;
        }
      if (ok) ++filters;
    }
    auto fc = filter_completion(l);
    EXPECT_EQ(filters, n);
    EXPECT_EQ(fc.frame.size(), n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        EXPECT_EQ(fc.frame.leq(fc.unit[a], fc.unit[b]), l.leq(b, a));
        EXPECT_EQ(fc.unit[l.join(a, b)], fc.frame.meet(fc.unit[a], fc.unit[b]));
        EXPECT_EQ(fc.unit[l.meet(a, b)], fc.frame.join(fc.unit[a], fc.unit[b]));
      }
  }
}

TEST(FramePoints, SmallExamples) {
  auto p2 = frame_points(two_frame());
  ASSERT_EQ(p2.size(), 1u);
  EXPECT_EQ(p2[0], FrameHom::identity(two_frame()));

  auto p3 = frame_points(chain(3));
  ASSERT_EQ(p3.size(), 2u);
  EXPECT_EQ(p3[0](1), 0);  // lexicographic: the point sending m to 0 first
  EXPECT_EQ(p3[1](1), 1);

  auto pd = frame_points(diamond());
  ASSERT_EQ(pd.size(), 2u);
  EXPECT_TRUE(frame_points(one_frame()).empty());
}

TEST(FramePoints, MatchBruteForceHomEnumeration) {
  for (const auto& l : frames_up_to(6)) {
    auto pts = frame_points(l);
    auto oracle = brute_force_points(l);
    ASSERT_EQ(pts.size(), oracle.size());
    for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(pts[i].image(), oracle[i]);
    EXPECT_EQ(pts.size(), l.join_irreducibles().size());
  }
}

TEST(EnumerateFrames, MaxTwoGivesOnlyTheTwoChain) {
  auto frames = enumerate_frames(2);
  std::vector<FiniteFrame> nontrivial;
  for (auto& f : frames)
    if (f.size() >= 2) nontrivial.push_back(f);
  ASSERT_EQ(nontrivial.size(), 1u);
  EXPECT_TRUE(isomorphic(nontrivial[0], two_frame()));
}

TEST(EnumerateFrames, MaxFourContainsNamedFrames) {
  auto frames = enumerate_frames(4);
  auto contains = [&](const FiniteFrame& x) {
    return std::any_of(frames.begin(), frames.end(), [&](const FiniteFrame& f) { return isomorphic(f, x); });
  };
  EXPECT_TRUE(contains(chain(3)));
  EXPECT_TRUE(contains(chain(4)));
  EXPECT_TRUE(contains(diamond()));
}

TEST(EnumerateFrames, AgreesWithBruteForceUpToSix) {
  auto frames = enumerate_frames(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    auto oracle = brute_force_lattices(n);
    std::vector<FiniteFrame> ours;
    for (auto& f : frames)
      if (f.size() == n) ours.push_back(f);
    ASSERT_EQ(ours.size(), oracle.size()) << "n=" << n;
    for (const auto& m : oracle) {
      bool hit = false;
      for (const auto& f : ours) hit = hit || raw_isomorphic(f.order_matrix(), m);
      EXPECT_TRUE(hit);
    }
  }
}

TEST(EnumerateFrames, IsomorphismFreeAndValid) {
  auto frames = enumerate_frames(8);
  // distributive lattices with 1..8 elements: 1,1,1,2,3,5,8,15
  std::vector<std::size_t> counts(9);
  for (auto& f : frames) ++counts[f.size()];
  EXPECT_EQ(counts, (std::vector<std::size_t>{0, 1, 1, 1, 2, 3, 5, 8, 15}));
  std::set<CanonicalForm> forms;
  for (auto& f : frames) {
    EXPECT_TRUE(forms.insert(canonical_form(f)).second);
    EXPECT_NO_THROW(validate_frame(f.order_matrix()));
  }
  for (std::size_t i = 0; i < frames.size(); ++i)
    for (std::size_t j = i + 1; j < frames.size(); ++j) EXPECT_FALSE(isomorphic(frames[i], frames[j]));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
  FiniteFrame d = diamond();
  // swap p and q, move top to index 0
  std::vector<std::size_t> perm{1, 3, 2, 0};
  OrderMatrix m = d.order_matrix(), r(4, std::vector<bool>(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r[perm[i]][perm[j]] = m[i][j];
  FiniteFrame shuffled = validate_frame(r);
  EXPECT_EQ(canonical_form(shuffled), canonical_form(d));
  auto iso = find_isomorphism(d, shuffled);
  ASSERT_TRUE(iso.has_value());
  for (Elem i = 0; i < 4; ++i)
    for (Elem j = 0; j < 4; ++j) EXPECT_EQ(d.leq(i, j), shuffled.leq((*iso)[i], (*iso)[j]));
  EXPECT_NE(canonical_form(chain(4)), canonical_form(diamond()));
}

TEST(Subframe, GeneratedSubframeOfDiamond) {
  FiniteFrame d = diamond();
  std::vector<Elem> gens{1};
  Subframe s = generated_subframe(d, gens);
  EXPECT_EQ(s.members, (std::vector<Elem>{0, 1, 3}));
  EXPECT_TRUE(isomorphic(s.frame, chain(3)));
  EXPECT_TRUE(s.inclusion.injective());
}
