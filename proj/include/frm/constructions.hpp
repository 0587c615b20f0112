#pragma once

#include <boost/dynamic_bitset.hpp>
#include <vector>

#include "frm/caps.hpp"
#include "frm/frame.hpp"
#include "frm/frame_hom.hpp"

namespace frm {

// Frame coproduct L ⊕ M realised as the C-ideals of L × M: downsets that
// contain every pair with a bottom coordinate and are closed under joining
// along either coordinate.
struct Coproduct {
  FiniteFrame left;
  FiniteFrame right;
  FiniteFrame frame;
  FrameHom inj_left;
  FrameHom inj_right;
  // ideals[i] is the C-ideal behind element i; bit a*|M|+b stands for (a, b).
  std::vector<boost::dynamic_bitset<>> ideals;

  // The unique hom h : L ⊕ M → T with h ∘ inj_left = f and h ∘ inj_right = g.
  FrameHom copair(const FrameHom& f, const FrameHom& g) const;
};

// Throws Error{SizeLimitExceeded} once the C-ideal count passes `cap`.
Coproduct coproduct(const FiniteFrame& left, const FiniteFrame& right, std::size_t cap = default_caps().coproduct);

// Filters of L ordered by inclusion. For finite L every filter is principal, so
// the result is L with the order reversed, element i standing for ↑i.
//
// `unit` sends a to ↑a. It is not a frame hom: it turns joins into meets and
// meets into joins (↑(a ∨ b) = ↑a ∧ ↑b). It is the generator map of the free
// construction used by assembly presentations.
struct FilterCompletion {
  FiniteFrame frame;
  std::vector<Elem> unit;
  std::vector<std::vector<bool>> filters;  // membership of each filter
};

FilterCompletion filter_completion(const FiniteFrame& frame);

}  // namespace frm
