#pragma once

#include <stdexcept>
#include <string>

namespace noset {

/// Error kinds surfaced by the library. CLI maps any of these to exit code 2.
enum class Errc {
  NotPrime,
  DimensionMismatch,
  ModulusMismatch,
  EmptyInput,
  SizeCapExceeded,
  SolverCapExceeded,
  NoConvergence,
  BudgetExceeded,
  DuplicateVector,
  SelfOrthogonalVector,
  BadSubset,
  ParseError,
  HypothesisViolated,
  RetriesExhausted,
  SamplerStuck,
  InvalidArgument,
  Internal,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace noset
