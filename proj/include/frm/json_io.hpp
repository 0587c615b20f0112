#pragma once

#include <string>

#include <json.hpp>

#include "frm/assembly.hpp"
#include "frm/axioms.hpp"
#include "frm/bispace.hpp"
#include "frm/congruence.hpp"
#include "frm/spectra.hpp"

namespace frm {

using Json = nlohmann::ordered_json;

// Readers throw Error{BadInput} on malformed documents and pass validation
// errors of the underlying constructors through unchanged.
Json frame_to_json(const FiniteFrame& f);
FiniteFrame frame_from_json(const Json& j);

Json congruence_to_json(const FiniteFrame& f, const Congruence& c);
Congruence congruence_from_json(const Json& j, FiniteFrame* frame_out = nullptr);

Json biframe_to_json(const Biframe& b);
Biframe biframe_from_json(const Json& j);

Json bispace_to_json(const FiniteBispace& x);
FiniteBispace bispace_from_json(const Json& j);

// Biframe document of the assembly; main labels name the congruence classes
// and "congruences" lists the classes of each main element.
Json assembly_to_json(const AssemblyResult& a);

// Bispace document plus φ± tables and the points as image vectors.
Json bispectrum_to_json(const Bispectrum& s);

Json verdict_to_json(const AxiomVerdict& v);

// The JSON document's "kind" field, or "" when absent.
std::string document_kind(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace frm
