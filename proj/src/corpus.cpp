#include "frm/corpus.hpp"

#include <map>
#include <random>
#include <tuple>

#include "frm/constructions.hpp"
#include "frm/enumeration.hpp"
#include "frm/json_io.hpp"

namespace frm {

namespace {

Biframe triple(const FiniteFrame& l, bool plus_is_two, bool minus_is_two) {
  std::vector<Elem> id(l.size()), bounds{l.bottom(), l.top()};
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = Elem(i);
  return Biframe(plus_is_two ? two_frame() : l, minus_is_two ? two_frame() : l, l, plus_is_two ? bounds : id,
                 minus_is_two ? bounds : id);
}

class Collector {
 public:
  explicit Collector(const CorpusParams& p) : p_(p) {}

  bool full() const { return p_.max_biframes && items_.size() >= p_.max_biframes; }

  void offer(Biframe b, std::string origin) {
    if (full() || b.main().join_irreducibles().size() > p_.max_join_irreducibles) return;
    auto key = std::make_tuple(canonical_form(b.plus()), canonical_form(b.minus()), canonical_form(b.main()));
    auto& bucket = buckets_[key];
    for (std::size_t i : bucket)
      if (find_biframe_isomorphism(items_[i].biframe, b)) return;
    bucket.push_back(items_.size());
    items_.push_back(CorpusItem{items_.size(), std::move(origin), std::move(b)});
  }

  std::vector<CorpusItem> take() { return std::move(items_); }

 private:
  const CorpusParams& p_;
  std::vector<CorpusItem> items_;
  std::map<std::tuple<CanonicalForm, CanonicalForm, CanonicalForm>, std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<CorpusItem> enumerate_corpus(const CorpusParams& params) {
  Collector out(params);
  out.offer(two_biframe(), "two");
  out.offer(sierpinski_biframe(), "sierpinski");

  std::vector<FiniteFrame> frames;
  for (auto& f : enumerate_frames(params.max_frame))
    if (!f.degenerate()) frames.push_back(std::move(f));

  for (std::size_t i = 0; i < frames.size(); ++i) {
    const std::string n = std::to_string(i);
    out.offer(triple(frames[i], false, true), "left(" + n + ")");
    out.offer(triple(frames[i], true, false), "right(" + n + ")");
    out.offer(triple(frames[i], false, false), "diagonal(" + n + ")");
  }

  std::mt19937_64 rng(params.seed);
  for (std::size_t i = 0; i < frames.size() && !out.full(); ++i)
    for (std::size_t j = 0; j < frames.size() && !out.full(); ++j) {
      const FiniteFrame &l = frames[i], &m = frames[j];
      if (l.join_irreducibles().size() + m.join_irreducibles().size() > params.max_join_irreducibles) continue;
      const std::string tag = "coproduct(" + std::to_string(i) + "," + std::to_string(j) + ")";
      Coproduct k = coproduct(l, m);
      out.offer(Biframe(k.inj_left, k.inj_right), tag);
      // up to two quotients by one or two sampled inequalities between generators
      std::size_t kept = 0;
      for (int attempt = 0; attempt < 6 && kept < 2; ++attempt) {
        std::vector<Seed> seeds;
        const int count = 1 + int(rng() % 2);
        for (int s = 0; s < count; ++s) {
          Elem a = Elem(rng() % l.size()), b = Elem(rng() % m.size());
          if (rng() % 2) seeds.push_back({k.inj_left(a), k.inj_right(b), SeedMode::force_leq});
          else seeds.push_back({k.inj_right(b), k.inj_left(a), SeedMode::force_leq});
        }
        Congruence c = congruence_closure(k.frame, seeds);
        if (c.is_diagonal() || c.is_all()) continue;
        Quotient q = quotient_frame(k.frame, c);
        FrameHom ep = compose(q.q, k.inj_left), em = compose(q.q, k.inj_right);
        if (!ep.injective() || !em.injective()) continue;
        out.offer(Biframe(ep, em), tag + "/" + std::to_string(attempt));
        ++kept;
      }
    }
  return out.take();
}

std::string fingerprint(const Biframe& b) {
  const std::string text = biframe_to_json(b).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[std::size_t(i)] = hex[h & 15];
  return s;
}

}  // namespace frm
