#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace locus {

enum class ErrorKind {
  InvalidInput,
  NotAPartialOrder,
  NotALattice,
  NotDistributive,
  FrameTooLarge,
  MixedFrames,
  NotASublocale,
  NotDense,
  NotMeetPreserving,
  AdjointNotFrameHom,
  NotDenseInjective,
  NotCommuting,
};

std::string_view to_string(ErrorKind kind);

/// Every validation failure in the library. The message names the violated
/// invariant and, where one exists, a witness.
class LocusError : public std::runtime_error {
 public:
  LocusError(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace locus
