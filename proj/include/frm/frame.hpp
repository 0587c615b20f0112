#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace frm {

// Elements of a finite frame are dense indices 0..size()-1.
using Elem = std::uint16_t;
inline constexpr std::size_t kMaxFrameSize = 65535;

using OrderMatrix = std::vector<std::vector<bool>>;

// A finite distributive lattice with bottom and top (every such lattice is a
// frame). Immutable after validation; copies share the precomputed tables.
class FiniteFrame {
 public:
  // The one-element (degenerate) frame.
  FiniteFrame();

  // Validates `leq` and precomputes meet, join and implication tables.
  // Throws Error{NotSquare, NotAPartialOrder, NoBoundedLattice, NotDistributive}.
  static FiniteFrame from_order(const OrderMatrix& leq, std::vector<std::string> labels = {});

  std::size_t size() const noexcept;
  // A frame with bottom == top; legal, but flagged wherever it appears.
  bool degenerate() const noexcept { return size() == 1; }

  Elem bottom() const noexcept;
  Elem top() const noexcept;

  bool leq(Elem a, Elem b) const noexcept;
  bool lt(Elem a, Elem b) const noexcept { return a != b && leq(a, b); }
  Elem meet(Elem a, Elem b) const noexcept;
  Elem join(Elem a, Elem b) const noexcept;
  // Heyting implication: greatest c with a ∧ c ≤ b.
  Elem implies(Elem a, Elem b) const noexcept;

  Elem meet_all(std::span<const Elem> xs) const noexcept;
  Elem join_all(std::span<const Elem> xs) const noexcept;

  // Join-irreducible elements (exactly one lower cover), ascending index order.
  const std::vector<Elem>& join_irreducibles() const noexcept;

  const std::string& label(Elem a) const;
  const std::vector<std::string>& labels() const noexcept;
  FiniteFrame with_labels(std::vector<std::string> labels) const;

  OrderMatrix order_matrix() const;

  // Structural equality: same size and identical order relation. Labels are ignored.
  friend bool operator==(const FiniteFrame& lhs, const FiniteFrame& rhs);

  struct Data;  // opaque; defined in frame.cpp

 private:
  explicit FiniteFrame(std::shared_ptr<const Data> data);
  std::shared_ptr<const Data> d_;
};

// Spelled-out validation entry point; same contract as FiniteFrame::from_order.
FiniteFrame validate_frame(const OrderMatrix& leq, std::vector<std::string> labels = {});

Elem heyting(const FiniteFrame& frame, Elem a, Elem b);

// A finite poset given by its (reflexive) order matrix.
struct Poset {
  std::size_t size = 0;
  OrderMatrix leq;
};

Poset join_irreducible_poset(const FiniteFrame& frame);

// Lattice of downsets of `poset` ordered by inclusion (Birkhoff). Elements are
// sorted by cardinality, so 0 is the empty downset. Requires poset.size <= 63.
FiniteFrame downset_lattice(const Poset& poset);

FiniteFrame one_frame();
FiniteFrame two_frame();
// Chain with n elements, labelled 0 < ... < n-1 (n = 3 gives 0 < m < 1).
FiniteFrame chain(std::size_t n);
// Boolean algebra with 2^k elements.
FiniteFrame boolean_frame(std::size_t k);
// The four-element diamond 2 × 2: 0 < p, q < 1.
FiniteFrame diamond();

}  // namespace frm
