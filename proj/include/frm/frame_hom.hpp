#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "frm/frame.hpp"

namespace frm {

// A map between finite frames preserving bottom, top, binary meets and joins.
class FrameHom {
 public:
  // Validates the hom laws; throws Error{NotAHom} with the offending pair.
  FrameHom(FiniteFrame source, FiniteFrame target, std::vector<Elem> image);

  static FrameHom identity(const FiniteFrame& frame);

  const FiniteFrame& source() const noexcept { return source_; }
  const FiniteFrame& target() const noexcept { return target_; }
  const std::vector<Elem>& image() const noexcept { return image_; }
  Elem operator()(Elem a) const { return image_.at(a); }

  bool injective() const;
  bool surjective() const;

  friend bool operator==(const FrameHom& lhs, const FrameHom& rhs) {
    return lhs.source_ == rhs.source_ && lhs.target_ == rhs.target_ && lhs.image_ == rhs.image_;
  }

 private:
  FiniteFrame source_;
  FiniteFrame target_;
  std::vector<Elem> image_;
};

// g ∘ f
FrameHom compose(const FrameHom& g, const FrameHom& f);

// Returns the first violated hom law as (a, b) witness pair, or nullopt.
std::optional<std::pair<Elem, Elem>> hom_violation(const FiniteFrame& source, const FiniteFrame& target,
                                                   std::span<const Elem> image);

// All frame homs into the two-element frame (characteristic maps of prime
// filters), sorted lexicographically by image vector.
std::vector<FrameHom> frame_points(const FiniteFrame& frame);

// A subframe given by its member elements (ascending) and the inclusion hom.
struct Subframe {
  FiniteFrame frame;
  std::vector<Elem> members;
  FrameHom inclusion;

  // Index inside `frame` of a member of the ambient frame.
  std::optional<Elem> index_of(Elem ambient) const;
};

// Smallest subframe containing `generators` (closure under ∧, ∨, ⊥, ⊤).
Subframe generated_subframe(const FiniteFrame& frame, std::span<const Elem> generators);

// Order isomorphisms between finite distributive lattices, found by matching
// join-irreducibles. The callback returns false to stop the search.
void for_each_isomorphism(const FiniteFrame& from, const FiniteFrame& to,
                          const std::function<bool(const std::vector<Elem>&)>& visit);
std::optional<std::vector<Elem>> find_isomorphism(const FiniteFrame& from, const FiniteFrame& to);
bool isomorphic(const FiniteFrame& a, const FiniteFrame& b);

}  // namespace frm
