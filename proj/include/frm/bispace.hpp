#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace frm {

// Point sets are bitmasks: bit i stands for point i.
using PointSet = std::uint64_t;
inline constexpr std::size_t kMaxPoints = 64;

using Family = std::vector<PointSet>;  // sorted ascending, no duplicates

PointSet full_set(std::size_t points);

// Smallest family containing `subbasis`, ∅ and the full set that is closed
// under binary union and intersection.
Family generate_topology(std::size_t points, std::span<const PointSet> subbasis);
// Pointwise complements, sorted.
Family complements(std::size_t points, const Family& family);
bool is_topology(std::size_t points, const Family& family);
Family join_families(const Family& a, const Family& b);

// A finite bitopological space.
class FiniteBispace {
 public:
  FiniteBispace() = default;
  // Throws Error{BadInput} unless both families are topologies on `points` points.
  FiniteBispace(std::size_t points, Family opens_plus, Family opens_minus, std::vector<std::string> labels = {});

  std::size_t points() const noexcept { return points_; }
  const Family& opens_plus() const noexcept { return plus_; }
  const Family& opens_minus() const noexcept { return minus_; }
  Family closed_plus() const { return complements(points_, plus_); }
  Family closed_minus() const { return complements(points_, minus_); }
  // Topology generated by both families together.
  Family patch() const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const FiniteBispace& a, const FiniteBispace& b) {
    return a.points_ == b.points_ && a.plus_ == b.plus_ && a.minus_ == b.minus_;
  }

 private:
  std::size_t points_ = 0;
  Family plus_{0};
  Family minus_{0};
  std::vector<std::string> labels_;
};

enum class SkulaVariant { sk, cf, pm };

// sk: ⟨Ω⁺ ∪ coΩ⁻⟩, ⟨Ω⁻ ∪ coΩ⁺⟩
// cf: ⟨Ω⁺ ∪ Ω⁻⟩, ⟨coΩ⁺ ∪ coΩ⁻⟩
// pm: ⟨Ω⁺ ∪ coΩ⁺⟩, ⟨Ω⁻ ∪ coΩ⁻⟩
FiniteBispace skula_variant(const FiniteBispace& x, SkulaVariant v);

// Salbany: for distinct x, y some positive or negative open contains x and omits y.
bool pairwise_t1_space(const FiniteBispace& x);

// Image of a point set under a point map (map[i] = image of point i).
PointSet transport(PointSet s, std::span<const std::size_t> map);
Family transport(const Family& f, std::span<const std::size_t> map);

}  // namespace frm
