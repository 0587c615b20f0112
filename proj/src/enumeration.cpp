#include "frm/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "frm/error.hpp"

namespace frm {

std::string poset_code(const Poset& poset) {
  const std::size_t k = poset.size;
  std::string best;
  std::vector<std::size_t> order;
  std::vector<bool> placed(k);
  std::string code;

  std::function<void()> rec = [&]() {
    if (!best.empty() && code.size() > 0 && code > best.substr(0, code.size())) return;
    if (order.size() == k) {
      if (best.empty() || code < best) best = code;
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (placed[c]) continue;
      bool minimal = true;
      for (std::size_t e = 0; e < k && minimal; ++e)
        if (!placed[e] && e != c && poset.leq[e][c]) minimal = false;
      if (!minimal) continue;
      const std::size_t before = code.size();
      for (std::size_t p : order) code.push_back(poset.leq[p][c] ? '1' : '0');
      placed[c] = true;
      order.push_back(c);
      rec();
      order.pop_back();
      placed[c] = false;
      code.resize(before);
    }
  };
  rec();
  return std::to_string(k) + ":" + best;
}

CanonicalForm canonical_form(const FiniteFrame& frame) {
  return CanonicalForm{frame.size(), poset_code(join_irreducible_poset(frame))};
}

namespace {

// A naturally labelled poset: below[i] is the (strict) lower set of i, all
// members having smaller indices.
using Masks = std::vector<std::uint64_t>;

std::vector<std::uint64_t> downsets_of(const Masks& below) {
  const std::size_t k = below.size();
  std::vector<std::uint64_t> out{0};
  // natural labelling: extend by deciding elements in index order
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t current = out.size();
    for (std::size_t s = 0; s < current; ++s)
      if ((below[i] & ~out[s]) == 0) out.push_back(out[s] | (std::uint64_t{1} << i));
  }
  return out;
}

Poset to_poset(const Masks& below) {
  Poset p;
  p.size = below.size();
  p.leq.assign(p.size, std::vector<bool>(p.size));
  for (std::size_t i = 0; i < p.size; ++i) {
    p.leq[i][i] = true;
    for (std::size_t j = 0; j < p.size; ++j)
      if (below[i] >> j & 1) p.leq[j][i] = true;
  }
  return p;
}

}  // namespace

std::vector<FiniteFrame> enumerate_frames(std::size_t max_size) {
  if (max_size == 0) throw Error(ErrorKind::BadInput, "max_size must be at least 1");
  if (max_size > 16) throw Error(ErrorKind::SizeLimitExceeded, "frame enumeration limited to 16 elements");

  std::vector<std::pair<CanonicalForm, FiniteFrame>> found;
  std::map<std::string, Masks> level{{poset_code(to_poset({})), Masks{}}};
  while (!level.empty()) {
    std::map<std::string, Masks> next;
    for (const auto& [code, below] : level) {
      auto downs = downsets_of(below);
      if (downs.size() > max_size) continue;
      FiniteFrame lattice = downset_lattice(to_poset(below));
      found.emplace_back(canonical_form(lattice), lattice);
      for (std::uint64_t d : downs) {
        Masks grown = below;
        grown.push_back(d);
        if (downsets_of(grown).size() > max_size) continue;
        std::string c = poset_code(to_poset(grown));
        next.emplace(std::move(c), std::move(grown));
      }
    }
    level = std::move(next);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FiniteFrame> frames;
  for (auto& [form, frame] : found) frames.push_back(std::move(frame));
  return frames;
}

}  // namespace frm
