#include "frm/constructions.hpp"

#include <algorithm>
#include <map>

#include "frm/error.hpp"

namespace frm {

namespace {

using Bits = boost::dynamic_bitset<>;

struct IdealSpace {
  const FiniteFrame& l;
  const FiniteFrame& m;
  std::size_t nl, nm;
  std::vector<Bits> down;  // ↓(a,b)
  Bits zero;               // pairs with a bottom coordinate

  IdealSpace(const FiniteFrame& left, const FiniteFrame& right)
      : l(left), m(right), nl(left.size()), nm(right.size()), down(nl * nm, Bits(nl * nm)), zero(nl * nm) {
    for (std::size_t a = 0; a < nl; ++a)
      for (std::size_t b = 0; b < nm; ++b) {
        Bits& d = down[a * nm + b];
        for (std::size_t x = 0; x < nl; ++x)
          for (std::size_t y = 0; y < nm; ++y)
            if (l.leq(Elem(x), Elem(a)) && m.leq(Elem(y), Elem(b))) d.set(x * nm + y);
      }
    for (std::size_t a = 0; a < nl; ++a)
      for (std::size_t b = 0; b < nm; ++b)
        if (a == l.bottom() || b == m.bottom()) zero.set(a * nm + b);
  }

  Bits saturate(Bits s) const {
    s |= zero;
    bool changed = true;
    while (changed) {
      changed = false;
      Bits closed = s;
      for (std::size_t p = s.find_first(); p != Bits::npos; p = s.find_next(p)) closed |= down[p];
      // join along the right coordinate
      for (std::size_t a = 0; a < nl; ++a) {
        Elem acc = m.bottom();
        for (std::size_t b = 0; b < nm; ++b)
          if (closed.test(a * nm + b)) acc = m.join(acc, Elem(b));
        closed |= down[a * nm + acc];
      }
      for (std::size_t b = 0; b < nm; ++b) {
        Elem acc = l.bottom();
        for (std::size_t a = 0; a < nl; ++a)
          if (closed.test(a * nm + b)) acc = l.join(acc, Elem(a));
        closed |= down[acc * nm + b];
      }
      if (closed != s) {
        s = std::move(closed);
        changed = true;
      }
    }
    return s;
  }
};

}  // namespace

Coproduct coproduct(const FiniteFrame& left, const FiniteFrame& right, std::size_t cap) {
  IdealSpace space(left, right);
  const std::size_t nm = space.nm;

  std::vector<Bits> gens;
  for (std::size_t a = 0; a < space.nl; ++a)
    for (std::size_t b = 0; b < nm; ++b) gens.push_back(space.down[a * nm + b] | space.zero);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  // every C-ideal is the join of the generators it contains
  std::map<Bits, std::size_t> seen;
  std::vector<Bits> ideals{space.zero};
  seen.emplace(space.zero, 0);
  for (const Bits& g : gens) {
    const std::size_t current = ideals.size();
    for (std::size_t i = 0; i < current; ++i) {
      Bits j = space.saturate(ideals[i] | g);
      if (seen.emplace(j, ideals.size()).second) {
        ideals.push_back(std::move(j));
        if (ideals.size() > cap)
          throw Error(ErrorKind::SizeLimitExceeded,
                      "coproduct exceeds " + std::to_string(cap) + " elements", {left.size(), right.size()});
      }
    }
  }

  std::sort(ideals.begin(), ideals.end(), [](const Bits& a, const Bits& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  const std::size_t n = ideals.size();
  OrderMatrix leq(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = ideals[i].is_subset_of(ideals[j]);
  FiniteFrame frame = FiniteFrame::from_order(leq);

  auto index_of = [&](const Bits& b) {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), b, [](const Bits& x, const Bits& y) {
      auto cx = x.count(), cy = y.count();
      return cx != cy ? cx < cy : x < y;
    });
    return Elem(it - ideals.begin());
  };
  std::vector<Elem> il(space.nl), ir(nm);
  for (std::size_t a = 0; a < space.nl; ++a) il[a] = index_of(space.down[a * nm + right.top()] | space.zero);
  for (std::size_t b = 0; b < nm; ++b) ir[b] = index_of(space.down[left.top() * nm + b] | space.zero);

  FrameHom inj_left(left, frame, std::move(il));
  FrameHom inj_right(right, frame, std::move(ir));
  return Coproduct{left, right, frame, std::move(inj_left), std::move(inj_right), std::move(ideals)};
}

FrameHom Coproduct::copair(const FrameHom& f, const FrameHom& g) const {
  if (!(f.source() == left) || !(g.source() == right) || !(f.target() == g.target()))
    throw Error(ErrorKind::NotAHom, "copair needs homs out of the two coproduct factors into one frame");
  const FiniteFrame& t = f.target();
  const std::size_t nm = right.size();
  std::vector<Elem> image(frame.size());
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    Elem acc = t.bottom();
    for (std::size_t p = ideals[i].find_first(); p != Bits::npos; p = ideals[i].find_next(p))
      acc = t.join(acc, t.meet(f(Elem(p / nm)), g(Elem(p % nm))));
    image[i] = acc;
  }
  return FrameHom(frame, t, std::move(image));
}

FilterCompletion filter_completion(const FiniteFrame& frame) {
  const std::size_t n = frame.size();
  std::vector<std::vector<bool>> filters(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) filters[a][x] = frame.leq(Elem(a), Elem(x));
  OrderMatrix leq(n, std::vector<bool>(n));
  std::vector<std::string> labels;
  std::vector<Elem> unit(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bool subset = true;
      for (std::size_t x = 0; x < n && subset; ++x)
        if (filters[a][x] && !filters[b][x]) subset = false;
      leq[a][b] = subset;
    }
    labels.push_back("^" + frame.label(Elem(a)));
    unit[a] = Elem(a);
  }
  return FilterCompletion{FiniteFrame::from_order(leq, std::move(labels)), std::move(unit), std::move(filters)};
}

}  // namespace frm
