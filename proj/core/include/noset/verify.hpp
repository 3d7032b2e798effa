#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "noset/vector_set.hpp"

namespace noset {

enum class WitnessKind { IndependentSet, BiIndependentPair, KlfreeSubset };
const char* witness_kind_name(WitnessKind kind);

/// Certificate of a violated predicate: the offending index set(s) into the
/// VectorSet's row order.
struct Witness {
  WitnessKind kind = WitnessKind::IndependentSet;
  std::vector<std::size_t> indices_1;  // sorted
  std::vector<std::size_t> indices_2;  // bi-independent pairs only

  /// `WITNESS kind=<kind> A1=<i,j,...> [A2=<...>]`
  std::string serialize() const;
};

struct CheckResult {
  bool pass = true;
  std::optional<Witness> witness;
};

struct VerifyConfig {
  std::uint64_t budget = 100'000'000;  // search-node visits
};

/// Pass iff every k+1 vectors include an orthogonal pair, i.e. the induced
/// orthogonality graph has no independent set of size k+1.
CheckResult check_alpha(const VectorSet& vs, std::uint64_t k,
                        const VerifyConfig& cfg = {});

/// Pass iff every two (possibly overlapping) subsets A1, A2 of size k+1 each
/// contain a cross-orthogonal pair.
CheckResult check_beta(const VectorSet& vs, std::uint64_t k,
                       const VerifyConfig& cfg = {});

/// Pass iff every subset of size K contains L pairwise orthogonal vectors
/// (an L-clique in the orthogonality graph; literal sizes, not the +1
/// convention).
CheckResult check_kl(const VectorSet& vs, std::uint64_t K, std::uint64_t L,
                     const VerifyConfig& cfg = {});

/// Re-validate a witness against raw inner products (not the cached graph).
/// `kl_l` is the clique size a klfree_subset witness claims to be free of.
bool witness_revalidates(const VectorSet& vs, const Witness& w,
                         std::uint64_t kl_l = 0);

}  // namespace noset
