#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frm/caps.hpp"
#include "frm/frame.hpp"
#include "frm/frame_hom.hpp"

namespace frm {

// A frame congruence stored as a partition of the element indices. Class ids
// are normalised by first appearance, so equal congruences compare equal
// element-wise. The frame itself is not stored; operations that need lattice
// structure take it as an argument.
class Congruence {
 public:
  Congruence() = default;

  // Validates that `class_ids` describes a partition compatible with ∧ and ∨.
  // Throws Error{NotACongruence} with witness (x, y, c) such that x ~ y but
  // x∧c ≁ y∧c or x∨c ≁ y∨c.
  Congruence(const FiniteFrame& frame, std::span<const std::uint32_t> class_ids);

  // Same as the validating constructor, minus the compatibility check, for
  // partitions produced by the closure algorithms.
  static Congruence trusted(const FiniteFrame& frame, std::span<const std::uint32_t> class_ids);

  static Congruence diagonal(const FiniteFrame& frame);
  static Congruence all(const FiniteFrame& frame);
  // Kernel of a frame hom: x ~ y iff f(x) = f(y).
  static Congruence kernel(const FrameHom& f);

  std::size_t size() const noexcept { return class_of_.size(); }
  std::size_t class_count() const noexcept { return class_max_.size(); }
  std::uint32_t class_of(Elem a) const { return class_of_.at(a); }
  Elem class_max(std::uint32_t c) const { return class_max_.at(c); }
  // Greatest element of the class of a.
  Elem top_of(Elem a) const { return class_max_[class_of_.at(a)]; }
  bool related(Elem a, Elem b) const { return class_of_.at(a) == class_of_.at(b); }

  const std::vector<std::uint32_t>& class_ids() const noexcept { return class_of_; }
  std::vector<std::vector<Elem>> classes() const;

  bool is_diagonal() const noexcept { return class_count() == size(); }
  bool is_all() const noexcept { return class_count() == 1; }

  // Inclusion as relations: this ⊆ other.
  bool subset_of(const Congruence& other) const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.class_of_ == b.class_of_; }
  // Linear extension of refinement: finer congruences (more classes) first.
  friend bool operator<(const Congruence& a, const Congruence& b);

 private:
  void assign(const FiniteFrame& frame, std::span<const std::uint32_t> class_ids);

  std::vector<std::uint32_t> class_of_;
  std::vector<Elem> class_max_;
};

enum class PrincipalKind { closed, open };

// ∇(a) = {(x, y) : x ∨ a = y ∨ a},  Δ(a) = {(x, y) : x ∧ a = y ∧ a}.
Congruence principal_congruence(const FiniteFrame& frame, Elem a, PrincipalKind kind);
Congruence nabla(const FiniteFrame& frame, Elem a);
Congruence delta(const FiniteFrame& frame, Elem a);

enum class SeedMode { equate, force_leq };

struct Seed {
  Elem x = 0;
  Elem y = 0;
  SeedMode mode = SeedMode::equate;
};

// Least congruence identifying each equate pair and forcing x ≤ y for each
// force_leq pair (i.e. containing (x, x ∧ y)).
Congruence congruence_closure(const FiniteFrame& frame, std::span<const Seed> seeds);
// Least congruence containing the given pairs.
Congruence generate_congruence(const FiniteFrame& frame, std::span<const std::pair<Elem, Elem>> pairs);

Congruence join(const FiniteFrame& frame, const Congruence& a, const Congruence& b);
Congruence join_all(const FiniteFrame& frame, std::span<const Congruence> cs);
Congruence meet(const FiniteFrame& frame, const Congruence& a, const Congruence& b);

struct Quotient {
  FiniteFrame frame;  // L/C; element i is the class with id i
  FrameHom q;         // the surjection L → L/C
  std::vector<Elem> representative;  // class_max of each quotient element
  bool degenerate = false;
};

Quotient quotient_frame(const FiniteFrame& frame, const Congruence& c);

// Every congruence of `frame`, by filtering all set partitions. Sorted finer
// first. Throws Error{SizeLimitExceeded} when frame.size() > cap.
std::vector<Congruence> enumerate_congruences(const FiniteFrame& frame, std::size_t cap = default_caps().oracle);

// A frame whose elements are a join-closed family of congruences on `base`,
// ordered by inclusion. Element i is congruences[i]; the family is sorted with
// Congruence::operator<, so the finest member comes first.
struct CongruenceFrame {
  FiniteFrame base;
  FiniteFrame frame;
  std::vector<Congruence> congruences;

  std::optional<Elem> index_of(const Congruence& c) const;
  Elem at(const Congruence& c) const;  // throws Error{BadInput} for non-members
};

// Closes `generators` (plus the diagonal) under joins and builds the
// inclusion-ordered frame. The family must be closed under finite meets for
// the result to be a sublattice of A(base); this is checked.
CongruenceFrame congruence_frame(const FiniteFrame& base, std::span<const Congruence> generators,
                                 std::size_t cap = default_caps().coproduct);

// The frame A(L) of all congruences, with the generator embeddings
// nabla[a] = index of ∇(a), delta[a] = index of Δ(a).
struct AssemblyFrame {
  CongruenceFrame family;
  std::vector<Elem> nabla;
  std::vector<Elem> delta;

  const FiniteFrame& frame() const noexcept { return family.frame; }
};

// Built as the join closure of {∇(a) ∩ Δ(b)}.
AssemblyFrame assembly_frame(const FiniteFrame& frame, std::size_t cap = default_caps().coproduct);

// ⋁{Δ(x) : Δ(x) ⊆ C}.
Congruence fitting(const FiniteFrame& frame, const Congruence& c);

}  // namespace frm
