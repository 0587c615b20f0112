#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace frm {

enum class ErrorKind {
  NotSquare,
  NotAPartialOrder,
  NoBoundedLattice,
  NotDistributive,
  NotAHom,
  NotInjective,
  NotACongruence,
  GenerationFails,
  SizeLimitExceeded,
  NotWellDefined,
  NoMediatingMap,
  NonUniqueMediatingMap,
  PreconditionViolated,
  UnknownSuite,
  BadInput,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `witness` holds the element indices
// (or point indices) that exhibit the violation, in the order the message
// names them.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace frm
