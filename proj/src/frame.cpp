#include "frm/frame.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include <boost/dynamic_bitset.hpp>

#include "frm/error.hpp"

namespace frm {

struct FiniteFrame::Data {
  std::size_t n = 1;
  Elem bottom = 0;
  Elem top = 0;
  std::vector<std::uint8_t> leq;  // row-major n*n
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> imp;
  std::vector<Elem> join_irreducibles;
  std::vector<std::string> labels;
};

namespace {

std::shared_ptr<const FiniteFrame::Data> build_data(const OrderMatrix& leq, std::vector<std::string> labels);

}  // namespace

FiniteFrame::FiniteFrame() : FiniteFrame(build_data(OrderMatrix{{true}}, {"0"})) {}

FiniteFrame::FiniteFrame(std::shared_ptr<const Data> data) : d_(std::move(data)) {}

FiniteFrame FiniteFrame::from_order(const OrderMatrix& leq, std::vector<std::string> labels) {
  return FiniteFrame(build_data(leq, std::move(labels)));
}

std::size_t FiniteFrame::size() const noexcept { return d_->n; }
Elem FiniteFrame::bottom() const noexcept { return d_->bottom; }
Elem FiniteFrame::top() const noexcept { return d_->top; }
bool FiniteFrame::leq(Elem a, Elem b) const noexcept { return d_->leq[a * d_->n + b] != 0; }
Elem FiniteFrame::meet(Elem a, Elem b) const noexcept { return d_->meet[a * d_->n + b]; }
Elem FiniteFrame::join(Elem a, Elem b) const noexcept { return d_->join[a * d_->n + b]; }
Elem FiniteFrame::implies(Elem a, Elem b) const noexcept { return d_->imp[a * d_->n + b]; }

Elem FiniteFrame::meet_all(std::span<const Elem> xs) const noexcept {
  Elem acc = top();
  for (Elem x : xs) acc = meet(acc, x);
  return acc;
}

Elem FiniteFrame::join_all(std::span<const Elem> xs) const noexcept {
  Elem acc = bottom();
  for (Elem x : xs) acc = join(acc, x);
  return acc;
}

const std::vector<Elem>& FiniteFrame::join_irreducibles() const noexcept { return d_->join_irreducibles; }

const std::string& FiniteFrame::label(Elem a) const { return d_->labels.at(a); }
const std::vector<std::string>& FiniteFrame::labels() const noexcept { return d_->labels; }

FiniteFrame FiniteFrame::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != size()) throw Error(ErrorKind::BadInput, "label count does not match frame size");
  auto copy = std::make_shared<Data>(*d_);
  copy->labels = std::move(labels);
  return FiniteFrame(std::move(copy));
}

OrderMatrix FiniteFrame::order_matrix() const {
  OrderMatrix m(size(), std::vector<bool>(size()));
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) m[a][b] = leq(Elem(a), Elem(b));
  return m;
}

bool operator==(const FiniteFrame& lhs, const FiniteFrame& rhs) {
  return lhs.d_ == rhs.d_ || (lhs.d_->n == rhs.d_->n && lhs.d_->leq == rhs.d_->leq);
}

namespace {

std::shared_ptr<const FiniteFrame::Data> build_data(const OrderMatrix& leq, std::vector<std::string> labels) {
  const std::size_t n = leq.size();
  if (n == 0) throw Error(ErrorKind::NotSquare, "order matrix is empty");
  if (n > kMaxFrameSize) throw Error(ErrorKind::SizeLimitExceeded, "frame has more than 65535 elements");
  for (std::size_t i = 0; i < n; ++i) {
    if (leq[i].size() != n) throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has wrong length", {i});
  }

  auto d = std::make_shared<FiniteFrame::Data>();
  d->n = n;
  d->leq.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) d->leq[a * n + b] = leq[a][b] ? 1 : 0;
  auto le = [&](std::size_t a, std::size_t b) { return d->leq[a * n + b] != 0; };

  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) throw Error(ErrorKind::NotAPartialOrder, "not reflexive at " + std::to_string(a), {a});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (le(a, b) && le(b, a))
        throw Error(ErrorKind::NotAPartialOrder,
                    "not antisymmetric: " + std::to_string(a) + " and " + std::to_string(b), {a, b});
  using Bits = boost::dynamic_bitset<>;
  std::vector<Bits> up(n, Bits(n)), down(n, Bits(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (le(a, b)) up[a].set(b), down[b].set(a);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = up[a].find_first(); b != Bits::npos; b = up[a].find_next(b))
      if (!up[b].is_subset_of(up[a])) {
        std::size_t c = (up[b] - up[a]).find_first();
        throw Error(ErrorKind::NotAPartialOrder,
                    "not transitive: " + std::to_string(a) + " <= " + std::to_string(b) + " <= " +
                        std::to_string(c),
                    {a, b, c});
      }

  bool found_bottom = false, found_top = false;
  for (std::size_t a = 0; a < n; ++a) {
    if (up[a].all()) d->bottom = Elem(a), found_bottom = true;
    if (down[a].all()) d->top = Elem(a), found_top = true;
  }
  if (!found_bottom) throw Error(ErrorKind::NoBoundedLattice, "no bottom element");
  if (!found_top) throw Error(ErrorKind::NoBoundedLattice, "no top element");

  // The meet of a and b, when it exists, is the lower bound with the most
  // elements below it. Bitsets indexed by rank (most elements below first)
  // make that candidate the first set bit of the common lower bounds.
  auto ranked = [&](const std::vector<Bits>& sets, std::vector<std::size_t>& order) {
    order.resize(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sets[x].count() > sets[y].count(); });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<Bits> out(n, Bits(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = sets[a].find_first(); b != Bits::npos; b = sets[a].find_next(b)) out[a].set(pos[b]);
    return out;
  };
  std::vector<std::size_t> by_down, by_up;
  const std::vector<Bits> down_r = ranked(down, by_down), up_r = ranked(up, by_up);
  d->meet.assign(n * n, 0);
  d->join.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Bits lower = down_r[a] & down_r[b], upper = up_r[a] & up_r[b];
      std::size_t glb = by_down[lower.find_first()], lub = by_up[upper.find_first()];
      if (!lower.is_subset_of(down_r[glb]))
        throw Error(ErrorKind::NoBoundedLattice,
                    "no meet for " + std::to_string(a) + " and " + std::to_string(b), {a, b});
      if (!upper.is_subset_of(up_r[lub]))
        throw Error(ErrorKind::NoBoundedLattice,
                    "no join for " + std::to_string(a) + " and " + std::to_string(b), {a, b});
      d->meet[a * n + b] = d->meet[b * n + a] = Elem(glb);
      d->join[a * n + b] = d->join[b * n + a] = Elem(lub);
    }
  }

  auto mt = [&](std::size_t a, std::size_t b) { return d->meet[a * n + b]; };
  auto jn = [&](std::size_t a, std::size_t b) { return d->join[a * n + b]; };

  for (std::size_t j = 0; j < n; ++j) {
    if (j == d->bottom) continue;
    Elem below = d->bottom;
    for (std::size_t c = down[j].find_first(); c != Bits::npos; c = down[j].find_next(c))
      if (c != j) below = jn(below, c);
    if (below != j) d->join_irreducibles.push_back(Elem(j));
  }

  // A finite lattice is distributive iff every join-irreducible j is join-prime:
  // j ≤ b ∨ c forces j ≤ b or j ≤ c. A failure gives j∧(b∨c) = j > (j∧b)∨(j∧c).
  for (Elem j : d->join_irreducibles)
    for (std::size_t b = 0; b < n; ++b) {
      if (le(j, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c)
        if (!le(j, c) && le(j, jn(b, c)))
          throw Error(ErrorKind::NotDistributive,
                      "a∧(b∨c) != (a∧b)∨(a∧c) for a=" + std::to_string(j) + " b=" + std::to_string(b) +
                          " c=" + std::to_string(c),
                      {j, b, c});
    }

  // a → b is the join of the join-irreducibles j with a ∧ j ≤ b.
  d->imp.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Elem acc = d->bottom;
      for (Elem j : d->join_irreducibles)
        if (le(mt(a, j), b)) acc = jn(acc, j);
      d->imp[a * n + b] = acc;
    }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  } else if (labels.size() != n) {
    throw Error(ErrorKind::BadInput, "label count does not match frame size");
  }
  d->labels = std::move(labels);
  return d;
}

}  // namespace

FiniteFrame validate_frame(const OrderMatrix& leq, std::vector<std::string> labels) {
  return FiniteFrame::from_order(leq, std::move(labels));
}

Elem heyting(const FiniteFrame& frame, Elem a, Elem b) { return frame.implies(a, b); }

Poset join_irreducible_poset(const FiniteFrame& frame) {
  const auto& js = frame.join_irreducibles();
  Poset p;
  p.size = js.size();
  p.leq.assign(p.size, std::vector<bool>(p.size));
  for (std::size_t i = 0; i < p.size; ++i)
    for (std::size_t k = 0; k < p.size; ++k) p.leq[i][k] = frame.leq(js[i], js[k]);
  return p;
}

FiniteFrame downset_lattice(const Poset& poset) {
  const std::size_t k = poset.size;
  if (k > 63) throw Error(ErrorKind::SizeLimitExceeded, "downset lattice needs a poset of at most 63 elements");
  std::vector<std::uint64_t> below(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (poset.leq[j][i]) below[i] |= std::uint64_t{1} << j;

  std::vector<std::uint64_t> downsets;
  // element i may be added once everything strictly below it with a smaller index is decided
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t set) {
    if (downsets.size() > kMaxFrameSize) throw Error(ErrorKind::SizeLimitExceeded, "too many downsets");
    if (i == k) {
      // closed downward?
      for (std::size_t e = 0; e < k; ++e)
        if ((set >> e & 1) && (below[e] & ~set)) return;
      downsets.push_back(set);
      return;
    }
    rec(i + 1, set);
    rec(i + 1, set | (std::uint64_t{1} << i));
  };
  if (k <= 20) {
    rec(0, 0);
  } else {
    throw Error(ErrorKind::SizeLimitExceeded, "downset enumeration limited to 20-element posets");
  }
  std::sort(downsets.begin(), downsets.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  const std::size_t n = downsets.size();
  OrderMatrix leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (downsets[a] & ~downsets[b]) == 0;
    std::string s = "{";
    bool first = true;
    for (std::size_t e = 0; e < k; ++e)
      if (downsets[a] >> e & 1) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
      }
    labels.push_back(s + "}");
  }
  return FiniteFrame::from_order(leq, std::move(labels));
}

FiniteFrame one_frame() { return FiniteFrame(); }

FiniteFrame two_frame() { return chain(2); }

FiniteFrame chain(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::BadInput, "chain needs at least one element");
  OrderMatrix leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = a <= b;
    if (a == 0) labels.push_back("0");
    else if (a + 1 == n) labels.push_back("1");
    else if (n == 3) labels.push_back("m");
    else labels.push_back("c" + std::to_string(a));
  }
  return FiniteFrame::from_order(leq, std::move(labels));
}

FiniteFrame boolean_frame(std::size_t k) {
  if (k > 12) throw Error(ErrorKind::SizeLimitExceeded, "boolean_frame limited to 2^12 elements");
  const std::size_t n = std::size_t{1} << k;
  OrderMatrix leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (a & ~b) == 0;
  return FiniteFrame::from_order(leq);
}

FiniteFrame diamond() {
  const bool t = true, f = false;
  OrderMatrix leq = {{t, t, t, t}, {f, t, f, t}, {f, f, t, t}, {f, f, f, t}};
  return FiniteFrame::from_order(leq, {"0", "p", "q", "1"});
}

}  // namespace frm
