#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "noset/bigint.hpp"
#include "noset/graph.hpp"
#include "noset/spectral.hpp"

namespace noset {

struct CountConfig {
  std::uint64_t budget = 100'000'000;  // DFS node visits across all workers
  unsigned threads = 1;                // partitions by first chosen vertex
};

/// Parameters the closed-form bounds are evaluated from. s is always
/// recomputed from (n, d).
struct BoundInput {
  std::uint64_t n = 0;
  std::uint64_t d = 0;
  double lambda = 0.0;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> ell;
  double c = 1.0;

  double s() const;  // 2 n log2(n) / d
  bool valid() const { return n >= 1 && k >= 1 && lambda > 0.0 &&
                              lambda <= static_cast<double>(d) && d <= n; }
};

enum class CountKind {
  BiIndependentExactK,
  BiIndependentLeK,
  KlfreeSubsets,
  KlCopies,
};
const char* count_kind_name(CountKind kind);

struct CountReport {
  CountKind kind = CountKind::BiIndependentExactK;
  std::optional<std::pair<std::uint64_t, std::uint32_t>> pt;  // (p,t) if known
  BoundInput params;
  BigUint exact;
  double log2_exact = -std::numeric_limits<double>::infinity();
  std::string bound_name = "-";
  std::optional<double> log2_bound;
  bool applicable = false;
  bool shape_only = false;  // bound depends on the free constant c

  /// pass / FAILURE for fully pinned bounds, shape-pass / shape-exceed for
  /// c-dependent ones, "-" when no bound applies.
  std::string verdict() const;
  /// `kind p t k ell exact log2_exact bound_name log2_bound applicable
  /// verdict`, tab-separated, `-` for absent fields.
  std::string tsv_line() const;
};

/// Ordered pairs (U1, U2), |U1| = |U2| = k, with no edge (loops included)
/// between U1 and U2. Bound attached when the graph is a full G(p,t) and
/// k >= s.
CountReport count_bi_independent_exact_k(const OrthoGraph& g, std::uint64_t k,
                                         const CountConfig& cfg = {});

/// Ordered pairs with |U1| <= k and |U2| <= k; empty sets satisfy the
/// condition vacuously and are counted iff include_empty.
CountReport count_bi_independent_le_k(const OrthoGraph& g, std::uint64_t k,
                                      bool include_empty = true,
                                      const CountConfig& cfg = {});

/// Subsets of size <= k whose induced subgraph contains no K_ell (loops
/// ignored). The attached container-style bound depends on the free constant
/// c and is marked shape-only.
CountReport count_klfree_subsets(const OrthoGraph& g, std::uint64_t k,
                                 std::uint64_t ell, bool include_empty = true,
                                 double c = 1.0, const CountConfig& cfg = {});

/// Copies of K_ell inside G[U] (ell-subsets of U, pairwise adjacent via
/// off-diagonal entries), against the first-moment estimate
/// (u^ell / ell!) (d/n)^{C(ell,2)}.
struct KlCopies {
  BigUint exact;
  double estimate = 0.0;
  double ratio = 0.0;  // exact / estimate, 0 when the estimate is 0
};
KlCopies count_kl_copies(const OrthoGraph& g, const DynBitset& u,
                         std::uint64_t ell, const CountConfig& cfg = {});

// Closed-form bounds, log2 space.
double log2_bound_bi_exact(const BoundInput& in);  // needs k >= s
double log2_bound_bi_le(const BoundInput& in);
double log2_bound_klfree(const BoundInput& in);  // shape-only (free c)
double bound_g_bipartite(std::uint64_t p, std::uint32_t t, std::uint64_t k,
                         double c);  // c(t^2+k) + tk log2 p
double bound_g_klfree(std::uint64_t p, std::uint32_t t, std::uint64_t k,
                      double c);  // c t^2 + (tk/2) log2 p

}  // namespace noset
