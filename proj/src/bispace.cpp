#include "frm/bispace.hpp"

#include <algorithm>
#include <set>

#include "frm/error.hpp"

namespace frm {

PointSet full_set(std::size_t points) {
  if (points > kMaxPoints) throw Error(ErrorKind::SizeLimitExceeded, "bispaces hold at most 64 points", {points});
  return points == 64 ? ~PointSet{0} : (PointSet{1} << points) - 1;
}

Family generate_topology(std::size_t points, std::span<const PointSet> subbasis) {
  const PointSet all = full_set(points);
  std::set<PointSet> seen{0, all};
  std::vector<PointSet> out{0, all};
  for (PointSet s : subbasis)
    if (seen.insert(s & all).second) out.push_back(s & all);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      PointSet u = out[i] | out[j], v = out[i] & out[j];
      if (seen.insert(u).second) out.push_back(u);
      if (seen.insert(v).second) out.push_back(v);
    }
  return Family(seen.begin(), seen.end());
}

Family complements(std::size_t points, const Family& family) {
  const PointSet all = full_set(points);
  Family out;
  for (PointSet s : family) out.push_back(all & ~s);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_topology(std::size_t points, const Family& family) {
  const PointSet all = full_set(points);
  if (!std::is_sorted(family.begin(), family.end())) return false;
  auto has = [&](PointSet s) { return std::binary_search(family.begin(), family.end(), s); };
  if (!has(0) || !has(all)) return false;
  for (PointSet a : family) {
    if (a & ~all) return false;
    for (PointSet b : family)
      if (!has(a | b) || !has(a & b)) return false;
  }
  return true;
}

Family join_families(const Family& a, const Family& b) {
  Family out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

FiniteBispace::FiniteBispace(std::size_t points, Family opens_plus, Family opens_minus,
                             std::vector<std::string> labels)
    : points_(points), plus_(std::move(opens_plus)), minus_(std::move(opens_minus)), labels_(std::move(labels)) {
  std::sort(plus_.begin(), plus_.end());
  std::sort(minus_.begin(), minus_.end());
  plus_.erase(std::unique(plus_.begin(), plus_.end()), plus_.end());
  minus_.erase(std::unique(minus_.begin(), minus_.end()), minus_.end());
  if (!is_topology(points_, plus_)) throw Error(ErrorKind::BadInput, "positive opens do not form a topology");
  if (!is_topology(points_, minus_)) throw Error(ErrorKind::BadInput, "negative opens do not form a topology");
  if (labels_.empty())
    for (std::size_t i = 0; i < points_; ++i) labels_.push_back("p" + std::to_string(i));
  if (labels_.size() != points_) throw Error(ErrorKind::BadInput, "label count does not match point count");
}

Family FiniteBispace::patch() const { return generate_topology(points_, join_families(plus_, minus_)); }

FiniteBispace skula_variant(const FiniteBispace& x, SkulaVariant v) {
  const std::size_t n = x.points();
  const Family cp = x.closed_plus(), cm = x.closed_minus();
  Family p, m;
  switch (v) {
    case SkulaVariant::sk:
      p = join_families(x.opens_plus(), cm);
      m = join_families(x.opens_minus(), cp);
      break;
    case SkulaVariant::cf:
      p = join_families(x.opens_plus(), x.opens_minus());
      m = join_families(cp, cm);
      break;
    case SkulaVariant::pm:
      p = join_families(x.opens_plus(), cp);
      m = join_families(x.opens_minus(), cm);
      break;
  }
  return FiniteBispace(n, generate_topology(n, p), generate_topology(n, m), x.labels());
}

bool pairwise_t1_space(const FiniteBispace& x) {
  for (std::size_t a = 0; a < x.points(); ++a)
    for (std::size_t b = 0; b < x.points(); ++b) {
      if (a == b) continue;
      bool separated = false;
      for (const Family* f : {&x.opens_plus(), &x.opens_minus()})
        for (PointSet u : *f)
          if ((u >> a & 1) && !(u >> b & 1)) separated = true;
      if (!separated) return false;
    }
  return true;
}

PointSet transport(PointSet s, std::span<const std::size_t> map) {
  PointSet out = 0;
  for (std::size_t i = 0; i < map.size(); ++i)
    if (s >> i & 1) out |= PointSet{1} << map[i];
  return out;
}

Family transport(const Family& f, std::span<const std::size_t> map) {
  Family out;
  for (PointSet s : f) out.push_back(transport(s, map));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace frm
