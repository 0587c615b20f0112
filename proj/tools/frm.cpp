// frm: command-line front end to the finite frame library.
// Exit codes: 0 success, 1 counterexample found, 2 usage or input error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "frm/assembly.hpp"
#include "frm/axioms.hpp"
#include "frm/corpus.hpp"
#include "frm/error.hpp"
#include "frm/json_io.hpp"
#include "frm/spectra.hpp"
#include "frm/suites.hpp"

using namespace frm;

namespace {

struct Options {
  std::string input, output, variant, suite = "all", axiom;
  std::size_t max_frame = default_caps().max_frame;
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
  bool json = false;
};

void emit(const Options& o, const Json& doc, const std::string& text) {
  if (!o.output.empty()) write_json_file(o.output, doc);
  if (o.json || (o.output.empty() && text.empty())) std::cout << doc.dump(2) << '\n';
  else if (!text.empty()) std::cout << text << '\n';
}

Biframe load_biframe(const Options& o) { return biframe_from_json(read_json_file(o.input)); }

Variant assembly_variant(const Options& o) {
  if (o.variant.empty()) return Variant::plain;
  if (auto v = parse_variant(o.variant)) return *v;
  throw Error(ErrorKind::BadInput, "unknown variant '" + o.variant + "' (plain, cf, pm)");
}

int cmd_check(const Options& o) {
  Json doc = read_json_file(o.input);
  const std::string kind = document_kind(doc);
  Json out{{"kind", kind}, {"valid", true}};
  std::string text;
  if (kind == "frame") {
    FiniteFrame f = frame_from_json(doc);
    out["size"] = f.size();
    out["join_irreducibles"] = f.join_irreducibles().size();
    text = "frame with " + std::to_string(f.size()) + " elements, " + std::to_string(f.join_irreducibles().size()) +
           " join-irreducible";
  } else if (kind == "congruence") {
    Congruence c = congruence_from_json(doc);
    out["classes"] = c.class_count();
    text = "congruence with " + std::to_string(c.class_count()) + " classes";
  } else if (kind == "biframe") {
    Biframe b = biframe_from_json(doc);
    auto fin = is_finitary_biframe(b);
    out["sizes"] = {b.plus().size(), b.minus().size(), b.main().size()};
    out["finitary"] = fin.is_finitary;
    out["fingerprint"] = fingerprint(b);
    text = "biframe (" + std::to_string(b.plus().size()) + ", " + std::to_string(b.minus().size()) + ", " +
           std::to_string(b.main().size()) + "), " + (fin.is_finitary ? "finitary" : "not finitary");
  } else if (kind == "bispace") {
    FiniteBispace x = bispace_from_json(doc);
    out["points"] = x.points();
    out["pairwise_t1"] = pairwise_t1_space(x);
    text = "bispace with " + std::to_string(x.points()) + " points";
  } else {
    throw Error(ErrorKind::BadInput, "unknown document kind '" + kind + "'");
  }
  emit(o, out, "valid " + text);
  return 0;
}

int cmd_assembly(const Options& o) {
  Biframe b = load_biframe(o);
  AssemblyResult a = assembly(b, assembly_variant(o));
  emit(o, assembly_to_json(a), o.output.empty() ? "" : "assembly with " + std::to_string(a.main().size()) +
                                                            " congruences written to " + o.output);
  return 0;
}

int cmd_bpt(const Options& o) {
  Bispectrum s = bpt(load_biframe(o));
  emit(o, bispectrum_to_json(s),
       o.output.empty() ? "" : std::to_string(s.points.size()) + " points written to " + o.output);
  return 0;
}

int cmd_skula(const Options& o) {
  Json doc = read_json_file(o.input);
  FiniteBispace x = document_kind(doc) == "biframe" ? bpt(biframe_from_json(doc)).space : bispace_from_json(doc);
  SkulaVariant v = SkulaVariant::sk;
  if (o.variant == "cf") v = SkulaVariant::cf;
  else if (o.variant == "pm") v = SkulaVariant::pm;
  else if (!o.variant.empty() && o.variant != "sk" && o.variant != "plain")
    throw Error(ErrorKind::BadInput, "unknown variant '" + o.variant + "' (sk, cf, pm)");
  emit(o, bispace_to_json(skula_variant(x, v)), o.output.empty() ? "" : "written to " + o.output);
  return 0;
}

int cmd_axioms(const Options& o) {
  Biframe b = load_biframe(o);
  std::vector<Axiom> which{Axiom::subfit, Axiom::fit, Axiom::pairwise_t1};
  if (!o.axiom.empty()) {
    auto a = parse_axiom(o.axiom);
    if (!a) throw Error(ErrorKind::BadInput, "unknown axiom '" + o.axiom + "' (subfit, fit, t1)");
    which = {*a};
  }
  FinitaryAssembly fin = finitary_assembly(b);
  Json out = Json::array();
  std::string text;
  bool consistent = true;
  for (Axiom a : which) {
    AxiomVerdict v = axiom_verdict(b, fin, a);
    consistent = consistent && v.consistent;
    out.push_back(verdict_to_json(v));
    text += std::string(to_string(a)) + ": " + (v.holds() ? "holds" : "fails");
    if (!v.consistent) text += " (conditions disagree)";
    text += '\n';
  }
  text.pop_back();
  emit(o, out, text);
  return consistent ? 0 : 1;
}

SuiteParams suite_params(const Options& o) {
  SuiteParams p;
  p.corpus.max_frame = o.max_frame;
  p.corpus.seed = o.seed;
  p.jobs = o.jobs;
  return p;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
  auto reports = run_suites(names, suite_params(o));
  Json out = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out.push_back(r.to_json());
    text += r.summary() + '\n';
  }
  text.pop_back();
  if (!o.output.empty()) write_json_file(o.output, reports.size() == 1 ? out.front() : out);
  if (o.json) std::cout << (reports.size() == 1 ? out.front() : out).dump(2) << '\n';
  else std::cout << text << '\n';
  return ok ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
  auto corpus = enumerate_corpus(suite_params(o).corpus);
  Json out = Json::array();
  std::string text;
  for (const auto& item : corpus) {
    const Biframe& b = item.biframe;
    out.push_back(Json{{"index", item.index},
                       {"origin", item.origin},
                       {"fingerprint", fingerprint(b)},
                       {"biframe", biframe_to_json(b)}});
    text += std::to_string(item.index) + "\t" + item.origin + "\t(" + std::to_string(b.plus().size()) + "," +
            std::to_string(b.minus().size()) + "," + std::to_string(b.main().size()) + ")\t" + fingerprint(b) + '\n';
  }
  text += std::to_string(corpus.size()) + " biframes";
  emit(o, out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite frames, biframes, assemblies and their spectra"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c, bool needs_input) {
    auto* in = c->add_option("--input", o.input, "input JSON document");
    if (needs_input) in->required();
    c->add_option("--output", o.output, "write the JSON result to this file");
    c->add_flag("--json", o.json, "print JSON instead of a summary");
    return c;
  };
  auto corpus_flags = [&](CLI::App* c) {
    c->add_option("--max-frame", o.max_frame, "largest side frame in the corpus");
    c->add_option("--seed", o.seed, "sampling seed");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* check = common(app.add_subcommand("check", "validate a frame, congruence, biframe or bispace"), true);
  auto* asm_ = common(app.add_subcommand("assembly", "assembly of a biframe"), true);
  asm_->add_option("--variant", o.variant, "plain, cf or pm");
  auto* bpt_ = common(app.add_subcommand("bpt", "bispectrum of a biframe"), true);
  auto* skula = common(app.add_subcommand("skula", "Skula bispace of a bispace or of a biframe's spectrum"), true);
  skula->add_option("--variant", o.variant, "sk, cf or pm");
  auto* axioms = common(app.add_subcommand("axioms", "subfitness, fitness and pairwise T1"), true);
  axioms->add_option("--axiom", o.axiom, "subfit, fit or t1");
  auto* verify = common(app.add_subcommand("verify", "run theorem suites over the corpus"), false);
  verify->add_option("--suite", o.suite, "suite name or 'all'");
  corpus_flags(verify);
  auto* enumerate = common(app.add_subcommand("enumerate", "list the corpus"), false);
  corpus_flags(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(o);
    if (*asm_) return cmd_assembly(o);
    if (*bpt_) return cmd_bpt(o);
    if (*skula) return cmd_skula(o);
    if (*axioms) return cmd_axioms(o);
    if (*verify) return cmd_verify(o);
    if (*enumerate) return cmd_enumerate(o);
  } catch (const Error& e) {
    std::cerr << "frm: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "frm: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
