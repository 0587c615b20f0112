#pragma once

// Small biframes shared by the unit tests. The harness has its own corpus;
// this list is deliberately built by simpler means so tests do not depend on it.

#include <vector>

#include "frm/biframe.hpp"
#include "frm/constructions.hpp"
#include "frm/enumeration.hpp"

namespace fixtures {

inline frm::Biframe identity_triple(const frm::FiniteFrame& l, bool plus_is_two, bool minus_is_two) {
  using namespace frm;
  auto bounds = [&]() { return std::vector<Elem>{l.bottom(), l.top()}; };
  std::vector<Elem> id(l.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = Elem(i);
  return Biframe(plus_is_two ? two_frame() : l, minus_is_two ? two_frame() : l, l, plus_is_two ? bounds() : id,
                 minus_is_two ? bounds() : id);
}

// Biframes whose main has at most 6 join-irreducibles (|A_fin| <= 64, the
// harness default).
inline std::vector<frm::Biframe> small_biframes(std::size_t max_frame = 5) {
  using namespace frm;
  std::vector<Biframe> all{two_biframe(), sierpinski_biframe()};
  auto& out = all;
  auto frames = enumerate_frames(max_frame);
  for (const auto& l : frames) {
    if (l.degenerate()) continue;
    out.push_back(identity_triple(l, false, true));
    out.push_back(identity_triple(l, true, false));
    out.push_back(identity_triple(l, false, false));
  }
  for (const auto& l : frames)
    for (const auto& m : frames) {
      if (l.degenerate() || m.degenerate() || l.size() * m.size() > 16) continue;
      Coproduct k = coproduct(l, m);
      out.emplace_back(k.inj_left, k.inj_right);
      // quotient by one generator inequality inj(a) ≤ inj(b), kept when e± stay injective
      for (Elem a = 0; a < l.size(); ++a) {
        Elem b = Elem((a * 7 + 3) % m.size());
        std::vector<Seed> seeds{{k.inj_left(a), k.inj_right(b), SeedMode::force_leq}};
        Congruence c = congruence_closure(k.frame, seeds);
        if (c.is_diagonal()) continue;
        Quotient q = quotient_frame(k.frame, c);
        FrameHom ep = compose(q.q, k.inj_left), em = compose(q.q, k.inj_right);
        if (ep.injective() && em.injective()) {
          out.emplace_back(ep, em);
          break;
        }
      }
    }
  std::vector<Biframe> kept;
  for (auto& b : all)
    if (b.main().join_irreducibles().size() <= 6) kept.push_back(b);
  return kept;
}

}  // namespace fixtures
