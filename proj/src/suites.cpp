#include "frm/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "frm/axioms.hpp"
#include "frm/enumeration.hpp"
#include "frm/error.hpp"

namespace frm {

namespace {

struct Outcome {
  std::size_t instances = 0;
  std::map<std::string, std::size_t> by_property;
  std::vector<std::pair<std::string, std::string>> failures;  // (property, witness)
  bool skipped = false;
  std::string skip_reason;

  void check(bool ok, const std::string& property, const std::string& witness = {}) {
    ++instances;
    ++by_property[property];
    if (!ok) failures.emplace_back(property, witness);
  }
};

std::string elems(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  for (auto it = xs.begin(); it != xs.end(); ++it) s += (it == xs.begin() ? "" : ",") + std::to_string(*it);
  return s + ")";
}

std::vector<Outcome> parallel_map(std::size_t n, std::size_t jobs, const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> out(n);
  auto guarded = [&](std::size_t i) {
    try {
      out[i] = fn(i);
    } catch (const Error& e) {
      out[i] = Outcome{};
      if (e.kind() == ErrorKind::SizeLimitExceeded) {
        out[i].skipped = true;
        out[i].skip_reason = e.what();
      } else {
        out[i].failures.emplace_back("no exception", e.what());
      }
    } catch (const std::exception& e) {
      out[i] = Outcome{};
      out[i].failures.emplace_back("no exception", e.what());
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) guarded(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

std::mt19937_64 item_rng(const SuiteParams& p, std::size_t index, std::uint64_t salt) {
  std::seed_seq seq{p.corpus.seed, std::uint64_t(index), salt};
  return std::mt19937_64(seq);
}

// ---- frame suites -------------------------------------------------------

Outcome congruence_oracle(const FiniteFrame& l) {
  Outcome o;
  const auto all = enumerate_congruences(l);
  std::vector<Seed> seeds;
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      for (SeedMode m : {SeedMode::equate, SeedMode::force_leq}) seeds.push_back({x, y, m});
  auto contains = [&](const Congruence& c, const Seed& s) {
    return s.mode == SeedMode::equate ? c.related(s.x, s.y) : c.related(s.x, l.meet(s.x, s.y));
  };
  auto least = [&](std::span<const Seed> set) {
    Congruence acc = Congruence::all(l);
    for (const auto& c : all)
      if (std::all_of(set.begin(), set.end(), [&](const Seed& s) { return contains(c, s); })) acc = meet(l, acc, c);
    return acc;
  };
  auto name = [](const Seed& s) {
    return elems({s.x, s.y}) + (s.mode == SeedMode::equate ? "=" : "<=");
  };
  o.check(congruence_closure(l, std::span<const Seed>{}) == Congruence::diagonal(l), "closure of no seeds");
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i; j < seeds.size(); ++j) {
      std::vector<Seed> set{seeds[i]};
      if (j != i) set.push_back(seeds[j]);
      o.check(congruence_closure(l, set) == least(set), "closure equals the least congruence",
              "seeds " + name(seeds[i]) + " " + name(seeds[j]));
    }
  return o;
}

Outcome assembly_laws(const FiniteFrame& l) {
  Outcome o;
  for (Elem a = 0; a < l.size(); ++a) {
    Congruence n = nabla(l, a), d = delta(l, a);
    o.check(meet(l, n, d).is_diagonal(), "∇(a) ∧ Δ(a) is the diagonal", elems({a}));
    o.check(join(l, n, d).is_all(), "∇(a) ∨ Δ(a) is everything", elems({a}));
  }
  for (Elem x = 0; x < l.size(); ++x)
    for (Elem y = 0; y < l.size(); ++y)
      o.check(delta(l, x).subset_of(nabla(l, y)) == (l.join(x, y) == l.top()), "Δ(x) ⊆ ∇(y) iff x ∨ y = ⊤",
              elems({x, y}));
  return o;
}

// ---- biframe suites -----------------------------------------------------

constexpr Variant kVariants[] = {Variant::plain, Variant::cf, Variant::pm};

bool same_quotient(const FiniteFrame& l, const Congruence& direct, const Quotient& first, const Quotient& second) {
  Congruence composite = Congruence::kernel(compose(second.q, first.q));
  return composite == direct && isomorphic(quotient_frame(l, direct).frame, second.frame);
}

Outcome quotient_lemmas(const CorpusItem& item, const SuiteParams& p) {
  Outcome o;
  const FiniteFrame& l = item.biframe.main();
  auto rng = item_rng(p, item.index, 0x51);
  auto pick = [&](const FiniteFrame& f) { return Elem(rng() % f.size()); };
  for (int round = 0; round < 4; ++round) {
    std::vector<Seed> cseed{{pick(l), pick(l), rng() % 2 ? SeedMode::equate : SeedMode::force_leq}};
    Congruence c = congruence_closure(l, cseed);
    Quotient q = quotient_frame(l, c);
    std::vector<Seed> c_pairs;
    for (Elem a = 0; a < l.size(); ++a) c_pairs.push_back({a, c.top_of(a), SeedMode::equate});

    // L/(C ∪ R) against (L/C)/[R]_C, R a relation of inequalities
    std::vector<Seed> r, r_image, with_r = c_pairs;
    const int rn = 1 + int(rng() % 2);
    for (int k = 0; k < rn; ++k) {
      Elem x = pick(l), y = pick(l);
      r.push_back({x, y, SeedMode::force_leq});
      r_image.push_back({q.q(x), q.q(y), SeedMode::force_leq});
    }
    with_r.insert(with_r.end(), r.begin(), r.end());
    Quotient q2 = quotient_frame(q.frame, congruence_closure(q.frame, r_image));
    o.check(same_quotient(l, congruence_closure(l, with_r), q, q2), "L/(C∪R) ≅ (L/C)/[R]_C",
            "C from " + elems({cseed[0].x, cseed[0].y}) + ", R pairs " + std::to_string(r.size()));

    // witness lemma: S on L/C lifted through the class maxima
    if (q.frame.degenerate()) continue;
    std::vector<Seed> s, lifted = c_pairs;
    for (int k = 0; k < rn; ++k) {
      Elem x = pick(q.frame), y = pick(q.frame);
      s.push_back({x, y, SeedMode::equate});
      lifted.push_back({q.representative[x], q.representative[y], SeedMode::equate});
    }
    Quotient q3 = quotient_frame(q.frame, congruence_closure(q.frame, s));
    o.check(same_quotient(l, congruence_closure(l, lifted), q, q3), "witness lemma",
            "C from " + elems({cseed[0].x, cseed[0].y}) + ", S pairs " + std::to_string(s.size()));
  }
  return o;
}

Outcome finitary_quotients(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  auto fin = finitary_assembly(b);
  const auto& cs = fin.family.congruences;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    bool c_fin = finitary_analysis(b, cs[i]).is_finitary;
    o.check(c_fin, "members of A_fin are finitary", "A_fin index " + std::to_string(i));
    if (cs[i].is_all()) continue;
    BiquotientResult q = biquotient(b, cs[i]);
    o.check(is_finitary_biframe(q.biframe).is_finitary == c_fin, "B/C finitary iff C finitary",
            "A_fin index " + std::to_string(i));
  }
  return o;
}

Outcome spectra_facts_suite(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  auto fin = finitary_assembly(b);
  Bispectrum spec = bpt(b);
  auto r = spectra_facts(b, spec, fin);
  o.check(r.joins, "spectrum of a join is the intersection", r.failures.empty() ? "" : r.failures.front());
  o.check(r.open_sides, "spectrum of Δ(e a) is φ(a)", r.failures.empty() ? "" : r.failures.front());
  o.check(r.closed_sides, "spectrum of ∇(e a) is φ(a)ᶜ", r.failures.empty() ? "" : r.failures.front());
  o.check(r.inequality, "spectrum of a forced inequality", r.failures.empty() ? "" : r.failures.front());
  for (std::size_t i = 0; i < fin.family.congruences.size(); ++i) {
    std::string m = quotient_spectrum_mismatch(b, spec, fin.family.congruences[i]);
    o.check(m.empty(), "bpt of a biquotient is the quotient subspace", "A_fin index " + std::to_string(i) + ": " + m);
  }
  return o;
}

Outcome skula_patch(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  Bispectrum spec = bpt(b);
  const FiniteBispace& x = spec.space;
  const Family all_four =
      join_families(join_families(x.opens_plus(), x.opens_minus()), join_families(x.closed_plus(), x.closed_minus()));
  const Family patch = generate_topology(x.points(), all_four);
  for (SkulaVariant v : {SkulaVariant::sk, SkulaVariant::cf, SkulaVariant::pm})
    o.check(skula_variant(x, v).patch() == patch, "Skula variants share one patch",
            "variant " + std::to_string(int(v)));
  auto r = skula_closed_sets(b, spec, finitary_assembly(b));
  o.check(r.cf_plus && r.cf_minus, "closed-fitted closed sets are quotient spectra", r.failure);
  o.check(r.pm_plus && r.pm_minus, "positive-negative closed sets are quotient spectra", r.failure);
  return o;
}

Outcome bisober(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  Bispectrum spec = bpt(b);
  auto fam = bisober_family(b, spec, finitary_assembly(b));
  o.check(fam.agree(), "bisober sets by formula and by quotients agree");
  for (SkulaVariant v : {SkulaVariant::sk, SkulaVariant::cf, SkulaVariant::pm})
    o.check(fam.by_sets == complements(spec.space.points(), skula_variant(spec.space, v).patch()),
            "bisober subspaces are the patch-closed sets", "variant " + std::to_string(int(v)));
  return o;
}

Outcome bijections(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  auto fin = finitary_assembly(b);
  Bispectrum spec = bpt(b);
  for (Variant v : kVariants) {
    auto a = assembly(b, fin, v);
    auto r = spectrum_bijection(b, spec, a, bpt(a.biframe));
    const std::string w = std::string(to_string(v)) + ": " + r.failure;
    o.check(r.bijective, "point lift is a bijection", w);
    o.check(r.subbasis_match, "subbasic opens map to generator spectra", w);
    o.check(r.bihomeomorphic, "Skula bispace is bihomeomorphic to bpt of the assembly", w);
  }
  return o;
}

Outcome presentations(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  const std::size_t cap = default_caps().presentation_side;
  if (b.plus().size() > cap || b.minus().size() > cap) {
    o.skipped = true;
    o.skip_reason = "sides larger than the presentation cap";
    return o;
  }
  auto fin = finitary_assembly(b);
  for (Variant v : kVariants) {
    auto r = presentation_check(b, assembly(b, fin, v));
    o.check(r.ok && r.presented_size == fin.frame().size(), "presented frame is the assembly",
            std::string(to_string(v)) + ": " + r.failure);
  }
  return o;
}

Outcome naturality(const CorpusItem& item, const SuiteParams& p) {
  Outcome o;
  const Biframe& b = item.biframe;
  auto fin = finitary_assembly(b);
  const auto& cs = fin.family.congruences;
  auto rng = item_rng(p, item.index, 0x4e);
  std::vector<std::pair<std::string, BiframeMap>> maps{{"identity", BiframeMap::identity(b)}};
  std::vector<BiquotientResult> quotients;
  for (int k = 0; k < 2 && cs.size() > 2; ++k) {
    std::size_t i = 1 + rng() % (cs.size() - 2);  // neither the diagonal nor everything
    quotients.push_back(biquotient(b, cs[i]));
    maps.emplace_back("quotient " + std::to_string(i), BiframeMap::from_main(b, quotients.back().biframe,
                                                                             quotients.back().quotient.q));
  }
  if (!quotients.empty()) {
    // a second quotient after the first, composed
    const BiquotientResult& q1 = quotients.front();
    auto fin1 = finitary_assembly(q1.biframe);
    const auto& c1 = fin1.family.congruences;
    if (c1.size() > 2) {
      std::size_t j = 1 + rng() % (c1.size() - 2);
      BiquotientResult q2 = biquotient(q1.biframe, c1[j]);
      BiframeMap f1 = BiframeMap::from_main(b, q1.biframe, q1.quotient.q);
      BiframeMap f2 = BiframeMap::from_main(q1.biframe, q2.biframe, q2.quotient.q);
      maps.emplace_back("composite via " + std::to_string(j), compose(f2, f1));
    }
  }
  for (Variant v : kVariants) {
    auto source = assembly(b, fin, v);
    for (const auto& [name, f] : maps) {
      auto target = assembly(f.target(), v);
      auto r = naturality_check(f, source, target);
      o.check(r.ok, "lift commutes with the assembly map", std::string(to_string(v)) + " " + name + ": " + r.failure);
    }
  }
  return o;
}

std::string failed_conditions(const AxiomVerdict& v) {
  std::string s = std::string(to_string(v.axiom)) + " conditions ";
  for (bool r : v.condition_results) s += r ? '1' : '0';
  return s;
}

Outcome axiom_suite(const CorpusItem& item, Axiom a) {
  Outcome o;
  const Biframe& b = item.biframe;
  auto fin = finitary_assembly(b);
  auto v = axiom_verdict(b, fin, a);
  o.check(v.consistent, "equivalent conditions agree", failed_conditions(v));
  if (a == Axiom::fit && v.holds()) {
    auto s = subfit_verdict(b, fin);
    o.check(s.holds(), "fit implies subfit", failed_conditions(s));
  }
  if (a == Axiom::pairwise_t1)
    o.check(v.condition_results[0] == pairwise_t1_space(bpt(b).space), "Salbany check matches condition (1)");
  return o;
}

Outcome universal_property(const CorpusItem& item, const SuiteParams&) {
  Outcome o;
  const Biframe& b = item.biframe;
  auto a = assembly(b, Variant::plain);
  auto unit = universal_property_check(nabla_unit(b, a), a);
  o.check(unit.g.main() == FrameHom::identity(a.main()), "the unit mediates to the identity");
  auto fa = finitary_assembly(a.biframe);
  const auto& cs = fa.family.congruences;
  for (std::size_t i : {cs.size() / 3, cs.size() / 2}) {
    BiquotientResult q = biquotient(a.biframe, cs[i]);
    if (q.degenerate) continue;
    BiframeMap qm = BiframeMap::from_main(a.biframe, q.biframe, q.quotient.q);
    auto g = universal_property_check(compose(qm, nabla_unit(b, a)), a);
    o.check(g.g.main() == q.quotient.q, "a quotient of the assembly mediates by its quotient map",
            "A_fin index " + std::to_string(i));
  }
  return o;
}

enum class Domain { small_frames, frames, corpus };

struct SuiteDef {
  std::string name;
  Domain domain;
  std::function<Outcome(const FiniteFrame&)> on_frame;
  std::function<Outcome(const CorpusItem&, const SuiteParams&)> on_item;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = [] {
    std::vector<SuiteDef> d;
    d.push_back({"congruence_oracle", Domain::small_frames, congruence_oracle, {}});
    d.push_back({"assembly_laws", Domain::frames, assembly_laws, {}});
    d.push_back({"quotient_lemmas", Domain::corpus, {}, quotient_lemmas});
    d.push_back({"finitary_quotients", Domain::corpus, {}, finitary_quotients});
    d.push_back({"spectra_facts", Domain::corpus, {}, spectra_facts_suite});
    d.push_back({"skula_patch", Domain::corpus, {}, skula_patch});
    d.push_back({"bisober", Domain::corpus, {}, bisober});
    d.push_back({"assembly_presentations", Domain::corpus, {}, presentations});
    d.push_back({"bijections", Domain::corpus, {}, bijections});
    d.push_back({"naturality", Domain::corpus, {}, naturality});
    d.push_back({"subfit", Domain::corpus, {}, [](const CorpusItem& i, const SuiteParams&) {
                   return axiom_suite(i, Axiom::subfit);
                 }});
    d.push_back({"fit", Domain::corpus, {}, [](const CorpusItem& i, const SuiteParams&) {
                   return axiom_suite(i, Axiom::fit);
                 }});
    d.push_back({"t1", Domain::corpus, {}, [](const CorpusItem& i, const SuiteParams&) {
                   return axiom_suite(i, Axiom::pairwise_t1);
                 }});
    d.push_back({"universal_property", Domain::corpus, {}, universal_property});
    return d;
  }();
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return d;
  throw Error(ErrorKind::UnknownSuite, "unknown suite '" + name + "'");
}

SuiteReport run_one(const SuiteDef& def, const SuiteParams& params, const std::vector<CorpusItem>& corpus) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.suite = def.name;
  report.params = params;
  std::vector<Outcome> outcomes;
  std::vector<Json> inputs;
  std::vector<std::string> origins, prints;
  if (def.domain == Domain::corpus) {
    outcomes = parallel_map(corpus.size(), params.jobs,
                            [&](std::size_t i) { return def.on_item(corpus[i], params); });
    for (const auto& item : corpus) origins.push_back(item.origin);
  } else {
    const std::size_t bound = def.domain == Domain::small_frames ? std::min<std::size_t>(6, params.corpus.max_frame)
                                                                  : params.corpus.max_frame;
    const auto frames = enumerate_frames(bound);
    outcomes = parallel_map(frames.size(), params.jobs, [&](std::size_t i) { return def.on_frame(frames[i]); });
    for (std::size_t i = 0; i < frames.size(); ++i) {
      origins.push_back("frame(" + std::to_string(i) + ")");
      inputs.push_back(frame_to_json(frames[i]));
    }
  }
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    if (o.skipped) {
      ++report.items_skipped;
      report.skip_reasons.push_back(origins[i] + ": " + o.skip_reason);
      continue;
    }
    ++report.items_checked;
    report.instances_checked += o.instances;
    for (const auto& [property, count] : o.by_property) report.instances_by_property[property] += count;
    for (const auto& [property, witness] : o.failures) {
      SuiteFailure f;
      f.item = i;
      f.origin = origins[i];
      if (def.domain == Domain::corpus) {
        f.input = biframe_to_json(corpus[i].biframe);
        f.fingerprint = fingerprint(corpus[i].biframe);
      } else {
        f.input = inputs[i];
        f.fingerprint = "frame-" + std::to_string(i);
      }
      f.property = property;
      f.witness = witness;
      report.failures.push_back(std::move(f));
    }
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

Json SuiteReport::to_json() const {
  const Caps& caps = default_caps();
  Json fails = Json::array();
  for (const auto& f : failures)
    fails.push_back(Json{{"item", f.item},
                         {"origin", f.origin},
                         {"fingerprint", f.fingerprint},
                         {"property", f.property},
                         {"witness", f.witness},
                         {"input", f.input}});
  return Json{{"suite", suite},
              {"parameters",
               {{"max_frame", params.corpus.max_frame},
                {"max_biframes", params.corpus.max_biframes},
                {"max_join_irreducibles", params.corpus.max_join_irreducibles},
                {"seed", params.corpus.seed},
                {"caps",
                 {{"max_assembly", caps.max_assembly},
                  {"presentation_side", caps.presentation_side},
                  {"coproduct", caps.coproduct},
                  {"oracle", caps.oracle},
                  {"max_points", caps.max_points}}}}},
              {"items_checked", items_checked},
              {"instances_checked", instances_checked},
              {"instances_by_property", instances_by_property},
              {"items_skipped", items_skipped},
              {"skipped", skip_reasons},
              {"failures", std::move(fails)}};
}

std::string SuiteReport::summary() const {
  std::ostringstream out;
  out << suite << ": " << (passed() ? "ok" : "FAILED") << ", " << items_checked << " items, " << instances_checked
      << " instances";
  if (items_skipped) out << ", " << items_skipped << " skipped";
  if (!failures.empty()) out << ", " << failures.size() << " failures";
  out.precision(2);
  out << std::fixed << " (" << wall_seconds << " s)";
  for (std::size_t i = 0; i < failures.size() && i < 5; ++i)
    out << "\n  " << failures[i].origin << " [" << failures[i].fingerprint << "] " << failures[i].property << ": "
        << failures[i].witness;
  return out.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& d : registry()) n.push_back(d.name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  return run_suites({name}, params).front();
}

std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteParams& params) {
  std::vector<const SuiteDef*> defs;
  bool need_corpus = false;
  for (const auto& n : names) {
    defs.push_back(&find_suite(n));
    need_corpus = need_corpus || defs.back()->domain == Domain::corpus;
  }
  std::vector<CorpusItem> corpus;
  if (need_corpus) corpus = enumerate_corpus(params.corpus);
  std::vector<SuiteReport> out;
  for (const auto* d : defs) out.push_back(run_one(*d, params, corpus));
  return out;
}

}  // namespace frm
