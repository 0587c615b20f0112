#include "frm/json_io.hpp"

#include <fstream>
#include <sstream>

#include "frm/error.hpp"

namespace frm {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_kind(const Json& j, const char* kind) {
  if (document_kind(j) != kind) bad(std::string("expected a document of kind '") + kind + "'");
}

std::size_t as_index(const Json& v, std::size_t bound, const char* what) {
  if (!v.is_number_integer() || v.get<long long>() < 0 || std::size_t(v.get<long long>()) >= bound)
    bad(std::string(what) + " is not an index below " + std::to_string(bound));
  return std::size_t(v.get<long long>());
}

std::vector<Elem> elem_list(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<Elem> out;
  for (const auto& v : j) out.push_back(Elem(as_index(v, bound, what)));
  return out;
}

Family family_from(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of bitmasks");
  Family f;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      bad(std::string(what) + " entries must be non-negative integers");
    f.push_back(v.get<std::uint64_t>());
  }
  return f;
}

std::string classes_label(const Congruence& c) {
  std::string s;
  for (const auto& cls : c.classes()) {
    s += '{';
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
    s += '}';
  }
  return s;
}

}  // namespace

std::string document_kind(const Json& j) {
  if (j.is_object() && j.contains("kind") && j.at("kind").is_string()) return j.at("kind").get<std::string>();
  return {};
}

Json frame_to_json(const FiniteFrame& f) {
  Json leq = Json::array();
  for (Elem a = 0; a < f.size(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < f.size(); ++b) row.push_back(f.leq(a, b) ? 1 : 0);
    leq.push_back(std::move(row));
  }
  return Json{{"kind", "frame"}, {"n", f.size()}, {"leq", std::move(leq)}, {"labels", f.labels()}};
}

FiniteFrame frame_from_json(const Json& j) {
  expect_kind(j, "frame");
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) bad("frame size 'n' must be a positive integer");
  const std::size_t size = n.get<std::size_t>();
  if (size > kMaxFrameSize) bad("frame too large");
  const Json& rows = field(j, "leq");
  if (!rows.is_array() || rows.size() != size) bad("'leq' must have n rows");
  OrderMatrix leq(size, std::vector<bool>(size));
  for (std::size_t a = 0; a < size; ++a) {
    if (!rows[a].is_array() || rows[a].size() != size) bad("'leq' must be an n × n matrix");
    for (std::size_t b = 0; b < size; ++b) {
      const Json& v = rows[a][b];
      if (v.is_boolean()) leq[a][b] = v.get<bool>();
      else if (v.is_number_integer() && (v == 0 || v == 1)) leq[a][b] = v == 1;
      else bad("'leq' entries must be 0 or 1");
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) bad("'labels' must be an array of strings");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) bad("'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (!labels.empty() && labels.size() != size) bad("label count does not match n");
  }
  return FiniteFrame::from_order(leq, std::move(labels));
}

Json congruence_to_json(const FiniteFrame& f, const Congruence& c) {
  Json classes = Json::array();
  for (const auto& cls : c.classes()) classes.push_back(cls);
  return Json{{"kind", "congruence"}, {"frame", frame_to_json(f)}, {"classes", std::move(classes)}};
}

Congruence congruence_from_json(const Json& j, FiniteFrame* frame_out) {
  expect_kind(j, "congruence");
  FiniteFrame f = frame_from_json(field(j, "frame"));
  const Json& classes = field(j, "classes");
  if (!classes.is_array()) bad("'classes' must be an array");
  std::vector<std::uint32_t> ids(f.size(), std::uint32_t(-1));
  std::uint32_t next = 0;
  for (const auto& cls : classes) {
    for (Elem x : elem_list(cls, f.size(), "class member")) {
      if (ids[x] != std::uint32_t(-1)) bad("element " + std::to_string(x) + " appears in two classes");
      ids[x] = next;
    }
    ++next;
  }
  for (std::size_t x = 0; x < ids.size(); ++x)
    if (ids[x] == std::uint32_t(-1)) bad("element " + std::to_string(x) + " is in no class");
  Congruence c(f, ids);
  if (frame_out) *frame_out = f;
  return c;
}

Json biframe_to_json(const Biframe& b) {
  return Json{{"kind", "biframe"},
              {"plus", frame_to_json(b.plus())},
              {"minus", frame_to_json(b.minus())},
              {"main", frame_to_json(b.main())},
              {"embed_plus", b.e_plus().image()},
              {"embed_minus", b.e_minus().image()}};
}

Biframe biframe_from_json(const Json& j) {
  expect_kind(j, "biframe");
  FiniteFrame plus = frame_from_json(field(j, "plus"));
  FiniteFrame minus = frame_from_json(field(j, "minus"));
  FiniteFrame main = frame_from_json(field(j, "main"));
  auto ep = elem_list(field(j, "embed_plus"), main.size(), "embed_plus entry");
  auto em = elem_list(field(j, "embed_minus"), main.size(), "embed_minus entry");
  if (ep.size() != plus.size()) bad("embed_plus must have one entry per positive element");
  if (em.size() != minus.size()) bad("embed_minus must have one entry per negative element");
  return validate_biframe(plus, minus, main, ep, em);
}

Json bispace_to_json(const FiniteBispace& x) {
  return Json{{"kind", "bispace"},
              {"points", x.points()},
              {"opens_plus", x.opens_plus()},
              {"opens_minus", x.opens_minus()},
              {"labels", x.labels()}};
}

FiniteBispace bispace_from_json(const Json& j) {
  expect_kind(j, "bispace");
  const Json& n = field(j, "points");
  if (!n.is_number_integer() || n.get<long long>() < 0 || n.get<long long>() > long(kMaxPoints))
    bad("'points' must be an integer between 0 and 64");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) bad("'labels' must be strings");
      labels.push_back(l.get<std::string>());
    }
  return FiniteBispace(n.get<std::size_t>(), family_from(field(j, "opens_plus"), "opens_plus"),
                       family_from(field(j, "opens_minus"), "opens_minus"), std::move(labels));
}

Json assembly_to_json(const AssemblyResult& a) {
  const auto& cs = a.fin.family.congruences;
  std::vector<std::string> labels;
  Json congruences = Json::array();
  for (const auto& c : cs) {
    labels.push_back(classes_label(c));
    Json classes = Json::array();
    for (const auto& cls : c.classes()) classes.push_back(cls);
    congruences.push_back(std::move(classes));
  }
  Biframe labelled(a.biframe.plus(), a.biframe.minus(), a.main().with_labels(labels), a.biframe.e_plus().image(),
                   a.biframe.e_minus().image());
  Json j = biframe_to_json(labelled);
  j["variant"] = std::string(to_string(a.variant));
  j["congruences"] = std::move(congruences);
  return j;
}

Json bispectrum_to_json(const Bispectrum& s) {
  Json j = bispace_to_json(s.space);
  Json points = Json::array();
  for (const auto& f : s.points) points.push_back(f.image());
  j["point_images"] = std::move(points);
  j["phi_plus"] = s.phi_plus;
  j["phi_minus"] = s.phi_minus;
  return j;
}

Json verdict_to_json(const AxiomVerdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses) {
    if (x) w.push_back(Json{{"description", x->description}, {"elements", x->elements}});
    else w.push_back(nullptr);
  }
  return Json{{"axiom", std::string(to_string(v.axiom))},
              {"holds", v.holds()},
              {"condition_results", v.condition_results},
              {"consistent", v.consistent},
              {"witnesses", std::move(w)}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) bad("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace frm
