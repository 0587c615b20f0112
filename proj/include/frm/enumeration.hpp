#pragma once

#include <compare>
#include <string>
#include <vector>

#include "frm/frame.hpp"

namespace frm {

// Isomorphism invariant of a finite distributive lattice: the lattice size
// plus the minimum strict-order encoding of its join-irreducible poset over
// all linear extensions. Two frames are isomorphic iff their forms are equal.
struct CanonicalForm {
  std::size_t size = 0;
  std::string code;

  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const FiniteFrame& frame);
std::string poset_code(const Poset& poset);

// All finite distributive lattices with at most max_size elements, one per
// isomorphism class, ordered by (size, canonical form). The one-element frame
// comes first. Throws Error{SizeLimitExceeded} above 16.
std::vector<FiniteFrame> enumerate_frames(std::size_t max_size);

}  // namespace frm
