#include "frm/frame_hom.hpp"

#include <algorithm>
#include <set>

#include "frm/error.hpp"

namespace frm {

std::optional<std::pair<Elem, Elem>> hom_violation(const FiniteFrame& source, const FiniteFrame& target,
                                                   std::span<const Elem> image) {
  const std::size_t n = source.size();
  if (image.size() != n) return std::pair<Elem, Elem>{0, 0};
  for (Elem v : image)
    if (v >= target.size()) return std::pair<Elem, Elem>{0, 0};
  if (image[source.bottom()] != target.bottom()) return std::pair{source.bottom(), source.bottom()};
  if (image[source.top()] != target.top()) return std::pair{source.top(), source.top()};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Elem x = Elem(a), y = Elem(b);
      if (image[source.meet(x, y)] != target.meet(image[x], image[y])) return std::pair{x, y};
      if (image[source.join(x, y)] != target.join(image[x], image[y])) return std::pair{x, y};
    }
  return std::nullopt;
}

FrameHom::FrameHom(FiniteFrame source, FiniteFrame target, std::vector<Elem> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != source_.size())
    throw Error(ErrorKind::NotAHom, "image table size does not match the source frame");
  for (std::size_t a = 0; a < image_.size(); ++a)
    if (image_[a] >= target_.size())
      throw Error(ErrorKind::NotAHom, "image of " + std::to_string(a) + " is outside the target", {a});
  if (auto bad = hom_violation(source_, target_, image_)) {
    throw Error(ErrorKind::NotAHom,
                "hom law fails at " + std::to_string(bad->first) + ", " + std::to_string(bad->second),
                {bad->first, bad->second});
  }
}

FrameHom FrameHom::identity(const FiniteFrame& frame) {
  std::vector<Elem> image(frame.size());
  for (std::size_t a = 0; a < image.size(); ++a) image[a] = Elem(a);
  return FrameHom(frame, frame, std::move(image));
}

bool FrameHom::injective() const {
  std::vector<bool> seen(target_.size());
  for (Elem v : image_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FrameHom::surjective() const {
  std::vector<bool> seen(target_.size());
  for (Elem v : image_) seen[v] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

FrameHom compose(const FrameHom& g, const FrameHom& f) {
  if (!(f.target() == g.source())) throw Error(ErrorKind::NotAHom, "composition of non-adjacent homs");
  std::vector<Elem> image(f.source().size());
  for (std::size_t a = 0; a < image.size(); ++a) image[a] = g(f(Elem(a)));
  return FrameHom(f.source(), g.target(), std::move(image));
}

std::vector<FrameHom> frame_points(const FiniteFrame& frame) {
  std::vector<std::vector<Elem>> images;
  const std::size_t n = frame.size();
  const FiniteFrame two = two_frame();
  for (std::size_t p = 0; p < n; ++p) {
    if (p == frame.bottom()) continue;
    // ↑p is a prime filter iff p ≤ a ∨ b forces p ≤ a or p ≤ b
    bool prime = true;
    for (std::size_t a = 0; a < n && prime; ++a)
      for (std::size_t b = a; b < n && prime; ++b)
        if (frame.leq(Elem(p), frame.join(Elem(a), Elem(b))) && !frame.leq(Elem(p), Elem(a)) &&
            !frame.leq(Elem(p), Elem(b)))
          prime = false;
    if (!prime) continue;
    std::vector<Elem> image(n);
    for (std::size_t x = 0; x < n; ++x) image[x] = frame.leq(Elem(p), Elem(x)) ? 1 : 0;
    images.push_back(std::move(image));
  }
  std::sort(images.begin(), images.end());
  std::vector<FrameHom> points;
  points.reserve(images.size());
  for (auto& image : images) points.emplace_back(frame, two, std::move(image));
  return points;
}

std::optional<Elem> Subframe::index_of(Elem ambient) const {
  auto it = std::lower_bound(members.begin(), members.end(), ambient);
  if (it == members.end() || *it != ambient) return std::nullopt;
  return Elem(it - members.begin());
}

namespace {

Subframe make_subframe(const FiniteFrame& frame, std::vector<Elem> members) {
  const std::size_t k = members.size();
  OrderMatrix leq(k, std::vector<bool>(k));
  std::vector<std::string> labels;
  labels.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) leq[i][j] = frame.leq(members[i], members[j]);
    labels.push_back(frame.label(members[i]));
  }
  FiniteFrame sub = FiniteFrame::from_order(leq, std::move(labels));
  FrameHom inclusion(sub, frame, members);
  return Subframe{std::move(sub), std::move(members), std::move(inclusion)};
}

}  // namespace

Subframe generated_subframe(const FiniteFrame& frame, std::span<const Elem> generators) {
  std::vector<bool> in(frame.size());
  std::vector<Elem> members;
  auto add = [&](Elem e) {
    if (!in[e]) {
      in[e] = true;
      members.push_back(e);
    }
  };
  add(frame.bottom());
  add(frame.top());
  for (Elem g : generators) add(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(frame.meet(members[i], members[j]));
      add(frame.join(members[i], members[j]));
    }
  }
  std::sort(members.begin(), members.end());
  return make_subframe(frame, std::move(members));
}

void for_each_isomorphism(const FiniteFrame& from, const FiniteFrame& to,
                          const std::function<bool(const std::vector<Elem>&)>& visit) {
  if (from.size() != to.size()) return;
  const auto& ja = from.join_irreducibles();
  const auto& jb = to.join_irreducibles();
  if (ja.size() != jb.size()) return;
  const std::size_t k = ja.size();
  std::vector<int> assign(k, -1);
  std::vector<bool> used(k);
  bool stop = false;

  auto extend = [&]() {
    std::vector<Elem> image(from.size());
    for (std::size_t x = 0; x < from.size(); ++x) {
      Elem acc = to.bottom();
      for (std::size_t i = 0; i < k; ++i)
        if (from.leq(ja[i], Elem(x))) acc = to.join(acc, jb[assign[i]]);
      image[x] = acc;
    }
    std::vector<bool> hit(to.size());
    for (Elem v : image) {
      if (hit[v]) return;
      hit[v] = true;
    }
    for (std::size_t x = 0; x < from.size(); ++x)
      for (std::size_t y = 0; y < from.size(); ++y)
        if (from.leq(Elem(x), Elem(y)) != to.leq(image[x], image[y])) return;
    if (!visit(image)) stop = true;
  };

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == k) {
      extend();
      return;
    }
    for (std::size_t c = 0; c < k && !stop; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < i && ok; ++p) {
        if (from.leq(ja[p], ja[i]) != to.leq(jb[assign[p]], jb[c])) ok = false;
        if (from.leq(ja[i], ja[p]) != to.leq(jb[c], jb[assign[p]])) ok = false;
      }
      if (!ok) continue;
      used[c] = true;
      assign[i] = int(c);
      rec(i + 1);
      used[c] = false;
      assign[i] = -1;
    }
  };
  rec(0);
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteFrame& from, const FiniteFrame& to) {
  std::optional<std::vector<Elem>> found;
  for_each_isomorphism(from, to, [&](const std::vector<Elem>& iso) {
    found = iso;
    return false;
  });
  return found;
}

bool isomorphic(const FiniteFrame& a, const FiniteFrame& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace frm
