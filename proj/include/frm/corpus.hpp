#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frm/biframe.hpp"

namespace frm {

struct CorpusParams {
  std::size_t max_frame = 8;              // sides come from enumerate_frames(max_frame)
  std::size_t max_biframes = 0;           // 0 = no limit
  std::uint64_t seed = 1;
  std::size_t max_join_irreducibles = 6;  // bound on |J(main)|, i.e. |A_fin| <= 2^6
};

struct CorpusItem {
  std::size_t index = 0;
  std::string origin;  // how the item was built, e.g. "coproduct(3,5)/2"
  Biframe biframe;
};

// Deterministic in (params). Items are pairwise non-isomorphic and ordered by
// construction: (F2,F2,F2) and the Sierpiński biframe first, then the
// triples built from one frame, then coproducts and their quotients by
// sampled generator inequalities.
std::vector<CorpusItem> enumerate_corpus(const CorpusParams& params);

// 16 hex digits of FNV-1a over the compact JSON document.
std::string fingerprint(const Biframe& b);

}  // namespace frm
