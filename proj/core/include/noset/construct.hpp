#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noset/field.hpp"
#include "noset/rng.hpp"
#include "noset/vector_set.hpp"
#include "noset/verify.hpp"

namespace noset {

struct ConstructionParams {
  std::uint64_t p = 2;
  std::uint64_t d = 0;    // ambient dimension of the output vectors
  std::uint64_t k = 2;    // subset size for the clique property
  std::uint64_t ell = 1;  // required pairwise-orthogonal count per k-subset
  double c = 1.0;
  std::uint32_t t = 1;    // component dimension
  std::uint32_t m = 1;    // tensor factors
  std::uint64_t n = 1;    // tuples drawn per attempt
  std::uint64_t seed = 0;
  std::uint32_t max_retries = 100;
  bool t_clamped = false;  // the k >= 5ct rule gave t < 1 and was clamped
};

struct ParamOverrides {
  std::optional<std::uint32_t> t;
  std::optional<std::uint32_t> m;
  std::optional<std::uint64_t> n;
};

/// t = max{t >= 1 : k >= 5ct} (clamped to 1 with a flag when k < 5c),
/// m = max{m >= 1 : d >= t^m} (capped at ceil(log2 d) when t = 1),
/// n = max(1, floor(p^{mt/4})), computed exactly via integer fourth root.
ConstructionParams derive_params(PrimeModulus p, std::uint64_t d,
                                 std::uint64_t k, std::uint64_t ell, double c,
                                 std::uint64_t seed,
                                 std::uint32_t max_retries = 100,
                                 const ParamOverrides& overrides = {});

/// m independent non-self-orthogonal draws from F_p^t.
std::vector<FieldVector> sample_tuple(PrimeModulus p, std::uint32_t t,
                                      std::uint32_t m, SplitMix64& rng);

/// One sampling pass: n tuples, tensorized, deduplicated, zero-padded to
/// dimension d. Rows of `set` align with `tuples` (a representative source
/// tuple per distinct vector) and `multiplicities` (draw counts, summing
/// to n).
struct Assembly {
  VectorSet set;
  std::vector<std::vector<FieldVector>> tuples;
  std::vector<std::uint64_t> multiplicities;
};
Assembly assemble(const ConstructionParams& params, SplitMix64& rng,
                  std::uint32_t retry = 0);

struct FailedAttempt {
  std::uint32_t retry = 0;
  std::string reason;  // which predicate failed
  std::optional<Witness> witness;
};

struct ConstructionReport {
  ConstructionParams params;
  std::uint32_t retries_used = 0;  // 0 = first attempt passed
  std::uint64_t set_size = 0;
  std::vector<std::uint64_t> multiplicities;
  std::vector<FailedAttempt> failures;
  double exponent = 0.0;  // log2|A| * log2 k / (k * log2 d), informational
};

struct ConstructOutcome {
  Assembly assembly;
  ConstructionReport report;
};

/// Retry loop: assemble with stream seed+retry, then demand every k-subset
/// contains ell pairwise orthogonal vectors and every two (2k-1)-subsets a
/// cross-orthogonal pair. Raises after max_retries failed attempts.
ConstructOutcome construct_verified(const ConstructionParams& params,
                                    const VerifyConfig& vcfg = {});

/// Standard basis e_1..e_d of F_p^d.
VectorSet basis_set(PrimeModulus p, std::uint64_t d);

}  // namespace noset
