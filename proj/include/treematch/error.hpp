#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace treematch {

enum class ErrorCode {
  InvalidGraph,
  ParseError,
  InvalidArgument,
  NotATree,
  NotBipartite,
  NotCubic,
  NotSubcubic,
  Disconnected,
  BadRotation,
  BadLayout,
  OddVertexCount,
  OddDeficiency,
  HostMismatch,
  WeightOrder,
  GroundSetMismatch,
  NotHamiltonian,
  NotSatisfying,
  NotStronglyBalanced,
  MalformedTree,
  TooLarge,
  Truncated,
};

std::string_view toString(ErrorCode code);

/// Precondition or input failure raised by every public operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(toString(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace treematch
