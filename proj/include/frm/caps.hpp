#pragma once

#include <cstddef>
#include <string>

namespace frm {

// Size bounds that keep exhaustive constructions at desk scale.
struct Caps {
  std::size_t max_frame = 8;            // corpus frames
  std::size_t max_assembly = 64;        // |A_fin| of a corpus biframe
  std::size_t presentation_side = 4;    // |L+|, |L-| for free presentations
  std::size_t coproduct = 4096;         // elements of any coproduct / closure frame
  std::size_t oracle = 7;               // brute-force congruence enumeration
  std::size_t max_points = 20;          // subset enumeration over spectra

  // Defaults, overridden by FRM_SIZE_CAP when it is set. The variable takes
  // either a bare integer (the global element cap `coproduct`) or a list such
  // as "max_frame=6,max_assembly=32".
  static Caps from_environment();

  // Applies one "key=value[,key=value...]" or bare-integer override string.
  void apply_override(const std::string& spec);
};

// Process-wide caps used when a caller does not pass explicit bounds.
const Caps& default_caps();

}  // namespace frm
