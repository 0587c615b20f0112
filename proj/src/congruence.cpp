#include "frm/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "frm/error.hpp"

namespace frm {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

  std::vector<std::uint32_t> ids() {
    std::vector<std::uint32_t> out(parent_.size());
    for (std::size_t x = 0; x < out.size(); ++x) out[x] = find(std::uint32_t(x));
    return out;
  }

 private:
  std::vector<std::uint32_t> parent_;
};

// Union-find closure: each merged pair pushes its translates by every c, so
// the final partition is the least compatible one containing the seeds.
class Closure {
 public:
  explicit Closure(const FiniteFrame& frame) : frame_(frame), uf_(frame.size()) {}

  void push(Elem a, Elem b) {
    if (a != b) queue_.emplace_back(a, b);
  }

  // Pairs of an existing congruence need no translates.
  void absorb(const Congruence& c) {
    for (std::size_t x = 0; x < c.size(); ++x) uf_.unite(std::uint32_t(x), c.top_of(Elem(x)));
  }

  Congruence run() {
    const std::size_t n = frame_.size();
    while (!queue_.empty()) {
      auto [a, b] = queue_.back();
      queue_.pop_back();
      if (!uf_.unite(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        push(frame_.meet(a, Elem(c)), frame_.meet(b, Elem(c)));
        push(frame_.join(a, Elem(c)), frame_.join(b, Elem(c)));
      }
    }
    auto ids = uf_.ids();
    return Congruence::trusted(frame_, ids);
  }

 private:
  const FiniteFrame& frame_;
  UnionFind uf_;
  std::vector<std::pair<Elem, Elem>> queue_;
};

}  // namespace

void Congruence::assign(const FiniteFrame& frame, std::span<const std::uint32_t> class_ids) {
  if (class_ids.size() != frame.size())
    throw Error(ErrorKind::NotACongruence, "class table size does not match the frame");
  std::map<std::uint32_t, std::uint32_t> renumber;
  class_of_.resize(class_ids.size());
  for (std::size_t x = 0; x < class_ids.size(); ++x) {
    auto [it, fresh] = renumber.try_emplace(class_ids[x], std::uint32_t(renumber.size()));
    class_of_[x] = it->second;
    if (fresh) class_max_.push_back(Elem(x));
    else class_max_[it->second] = frame.join(class_max_[it->second], Elem(x));
  }
}

Congruence Congruence::trusted(const FiniteFrame& frame, std::span<const std::uint32_t> class_ids) {
  Congruence c;
  c.assign(frame, class_ids);
  return c;
}

Congruence::Congruence(const FiniteFrame& frame, std::span<const std::uint32_t> class_ids) {
  assign(frame, class_ids);
  // x ~ top_of(x) for every x generates the partition, so checking those pairs suffices.
  const std::size_t n = frame.size();
  for (std::size_t x = 0; x < n; ++x) {
    Elem r = top_of(Elem(x));
    for (std::size_t c = 0; c < n; ++c) {
      if (!related(frame.meet(Elem(x), Elem(c)), frame.meet(r, Elem(c))) ||
          !related(frame.join(Elem(x), Elem(c)), frame.join(r, Elem(c))))
        throw Error(ErrorKind::NotACongruence,
                    "partition is not compatible at " + std::to_string(x) + " ~ " + std::to_string(r) +
                        " with " + std::to_string(c),
                    {x, r, c});
    }
  }
}

Congruence Congruence::diagonal(const FiniteFrame& frame) {
  std::vector<std::uint32_t> ids(frame.size());
  std::iota(ids.begin(), ids.end(), 0u);
  return trusted(frame, ids);
}

Congruence Congruence::all(const FiniteFrame& frame) {
  std::vector<std::uint32_t> ids(frame.size(), 0);
  return trusted(frame, ids);
}

Congruence Congruence::kernel(const FrameHom& f) {
  std::vector<std::uint32_t> ids(f.image().begin(), f.image().end());
  return trusted(f.source(), ids);
}

std::vector<std::vector<Elem>> Congruence::classes() const {
  std::vector<std::vector<Elem>> out(class_count());
  for (std::size_t x = 0; x < size(); ++x) out[class_of_[x]].push_back(Elem(x));
  return out;
}

bool Congruence::subset_of(const Congruence& other) const {
  if (other.size() != size()) return false;
  for (std::size_t x = 0; x < size(); ++x)
    if (!other.related(Elem(x), top_of(Elem(x)))) return false;
  return true;
}

bool operator<(const Congruence& a, const Congruence& b) {
  if (a.class_count() != b.class_count()) return a.class_count() > b.class_count();
  return a.class_of_ < b.class_of_;
}

Congruence principal_congruence(const FiniteFrame& frame, Elem a, PrincipalKind kind) {
  std::vector<std::uint32_t> ids(frame.size());
  for (std::size_t x = 0; x < ids.size(); ++x)
    ids[x] = kind == PrincipalKind::closed ? frame.join(Elem(x), a) : frame.meet(Elem(x), a);
  return Congruence::trusted(frame, ids);
}

Congruence nabla(const FiniteFrame& frame, Elem a) { return principal_congruence(frame, a, PrincipalKind::closed); }
Congruence delta(const FiniteFrame& frame, Elem a) { return principal_congruence(frame, a, PrincipalKind::open); }

Congruence congruence_closure(const FiniteFrame& frame, std::span<const Seed> seeds) {
  Closure closure(frame);
  for (const Seed& s : seeds) {
    if (s.mode == SeedMode::equate) closure.push(s.x, s.y);
    else closure.push(s.x, frame.meet(s.x, s.y));
  }
  return closure.run();
}

Congruence generate_congruence(const FiniteFrame& frame, std::span<const std::pair<Elem, Elem>> pairs) {
  Closure closure(frame);
  for (auto [x, y] : pairs) closure.push(x, y);
  return closure.run();
}

// The transitive closure of two compatible relations is already compatible.
Congruence join(const FiniteFrame& frame, const Congruence& a, const Congruence& b) {
  Closure closure(frame);
  closure.absorb(a);
  closure.absorb(b);
  return closure.run();
}

Congruence join_all(const FiniteFrame& frame, std::span<const Congruence> cs) {
  Closure closure(frame);
  for (const auto& c : cs) closure.absorb(c);
  return closure.run();
}

Congruence meet(const FiniteFrame& frame, const Congruence& a, const Congruence& b) {
  std::vector<std::uint32_t> ids(frame.size());
  for (std::size_t x = 0; x < ids.size(); ++x)
    ids[x] = a.class_of(Elem(x)) * std::uint32_t(b.class_count()) + b.class_of(Elem(x));
  return Congruence::trusted(frame, ids);
}

Quotient quotient_frame(const FiniteFrame& frame, const Congruence& c) {
  const std::size_t k = c.class_count();
  std::vector<Elem> rep(k);
  for (std::size_t i = 0; i < k; ++i) rep[i] = c.class_max(std::uint32_t(i));
  OrderMatrix order(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) order[i][j] = frame.leq(rep[i], rep[j]);
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "[" + frame.label(rep[i]) + "]";
  FiniteFrame qf = FiniteFrame::from_order(order, std::move(labels));
  std::vector<Elem> image(frame.size());
  for (std::size_t x = 0; x < image.size(); ++x) image[x] = Elem(c.class_of(Elem(x)));
  FrameHom q(frame, qf, std::move(image));
  return Quotient{qf, std::move(q), std::move(rep), k == 1};
}

std::vector<Congruence> enumerate_congruences(const FiniteFrame& frame, std::size_t cap) {
  const std::size_t n = frame.size();
  if (n > cap)
    throw Error(ErrorKind::SizeLimitExceeded,
                "congruence enumeration limited to " + std::to_string(cap) + " elements", {n});
  std::vector<Congruence> out;
  std::vector<std::uint32_t> ids(n, 0);
  // restricted growth strings: ids[x] <= 1 + max(ids[0..x-1])
  auto rec = [&](auto&& self, std::size_t x, std::uint32_t used) -> void {
    if (x == n) {
      try {
        out.emplace_back(frame, ids);
      } catch (const Error&) {
      }
      return;
    }
    for (std::uint32_t c = 0; c <= used && c < n; ++c) {
      ids[x] = c;
      self(self, x + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Elem> CongruenceFrame::index_of(const Congruence& c) const {
  auto it = std::lower_bound(congruences.begin(), congruences.end(), c);
  if (it == congruences.end() || !(*it == c)) return std::nullopt;
  return Elem(it - congruences.begin());
}

Elem CongruenceFrame::at(const Congruence& c) const {
  if (auto i = index_of(c)) return *i;
  throw Error(ErrorKind::BadInput, "congruence is not a member of this family");
}

CongruenceFrame congruence_frame(const FiniteFrame& base, std::span<const Congruence> generators, std::size_t cap) {
  std::vector<Congruence> family;
  std::map<std::vector<std::uint32_t>, std::size_t> seen;
  auto add = [&](Congruence c) {
    if (seen.try_emplace(c.class_ids(), family.size()).second) {
      family.push_back(std::move(c));
      if (family.size() > cap)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "congruence family exceeds " + std::to_string(cap) + " members", {family.size()});
    }
  };
  add(Congruence::diagonal(base));
  for (const auto& g : generators) add(g);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(join(base, family[i], family[j]));
  std::sort(family.begin(), family.end());

  const std::size_t k = family.size();
  OrderMatrix order(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) order[i][j] = family[i].subset_of(family[j]);

  CongruenceFrame out{base, FiniteFrame{}, std::move(family)};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!out.index_of(meet(base, out.congruences[i], out.congruences[j])))
        throw Error(ErrorKind::PreconditionViolated, "congruence family is not closed under intersection", {j, i});

  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = "C" + std::to_string(i);
  out.frame = FiniteFrame::from_order(order, std::move(labels));
  return out;
}

AssemblyFrame assembly_frame(const FiniteFrame& frame, std::size_t cap) {
  const std::size_t j = frame.join_irreducibles().size();
  if (j >= 63 || (std::size_t{1} << j) > cap)
    throw Error(ErrorKind::SizeLimitExceeded, "congruence frame would exceed " + std::to_string(cap) + " elements",
                {j});
  const std::size_t n = frame.size();
  std::vector<Congruence> nab, del, gens;
  for (std::size_t a = 0; a < n; ++a) {
    nab.push_back(nabla(frame, Elem(a)));
    del.push_back(delta(frame, Elem(a)));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) gens.push_back(meet(frame, nab[a], del[b]));
  AssemblyFrame out{congruence_frame(frame, gens, cap), {}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    out.nabla.push_back(out.family.at(nab[a]));
    out.delta.push_back(out.family.at(del[a]));
  }
  return out;
}

Congruence fitting(const FiniteFrame& frame, const Congruence& c) {
  Closure closure(frame);
  const std::size_t n = frame.size();
  for (std::size_t x = 0; x < n; ++x) {
    // Δ(x) is generated by the pairs (y, y ∧ x)
    bool inside = true;
    for (std::size_t y = 0; y < n && inside; ++y) inside = c.related(Elem(y), frame.meet(Elem(y), Elem(x)));
    if (inside) closure.absorb(delta(frame, Elem(x)));
  }
  return closure.run();
}

}  // namespace frm
