#include "noset/error.hpp"

namespace noset {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotPrime: return "not a prime";
    case Errc::DimensionMismatch: return "dimension mismatch";
    case Errc::ModulusMismatch: return "modulus mismatch";
    case Errc::EmptyInput: return "empty input";
    case Errc::SizeCapExceeded: return "size cap exceeded";
    case Errc::SolverCapExceeded: return "solver cap exceeded";
    case Errc::NoConvergence: return "no convergence";
    case Errc::BudgetExceeded: return "budget exceeded";
    case Errc::DuplicateVector: return "duplicate vector";
    case Errc::SelfOrthogonalVector: return "self-orthogonal vector";
    case Errc::BadSubset: return "bad subset";
    case Errc::ParseError: return "parse error";
    case Errc::HypothesisViolated: return "hypothesis violated";
    case Errc::RetriesExhausted: return "retries exhausted";
    case Errc::SamplerStuck: return "sampler stuck";
    case Errc::InvalidArgument: return "invalid argument";
    case Errc::Internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace noset
