#include "frm/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "frm/error.hpp"

namespace frm {

namespace {

std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw Error(ErrorKind::BadInput, "size cap is not an integer: '" + text + "'");
  }
  if (pos != text.size() || value == 0) {
    throw Error(ErrorKind::BadInput, "size cap must be a positive integer: '" + text + "'");
  }
  return static_cast<std::size_t>(value);
}

}  // namespace

void Caps::apply_override(const std::string& spec) {
  if (spec.empty()) return;
  if (spec.find('=') == std::string::npos) {
    coproduct = parse_size(spec);
    return;
  }
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::BadInput, "malformed cap entry: '" + item + "'");
    std::string key = item.substr(0, eq);
    std::size_t value = parse_size(item.substr(eq + 1));
    if (key == "max_frame") max_frame = value;
    else if (key == "max_assembly") max_assembly = value;
    else if (key == "presentation_side") presentation_side = value;
    else if (key == "coproduct") coproduct = value;
    else if (key == "oracle") oracle = value;
    else if (key == "max_points") max_points = value;
    else throw Error(ErrorKind::BadInput, "unknown cap: '" + key + "'");
  }
}

Caps Caps::from_environment() {
  Caps caps;
  if (const char* env = std::getenv("FRM_SIZE_CAP")) caps.apply_override(env);
  return caps;
}

const Caps& default_caps() {
  static const Caps caps = Caps::from_environment();
  return caps;
}

}  // namespace frm
