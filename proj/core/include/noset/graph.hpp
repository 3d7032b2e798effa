#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noset/bitset.hpp"
#include "noset/field.hpp"
#include "noset/vector_set.hpp"

namespace noset {

/// Orthogonality graph over a set of labeled vectors. Adjacency rows are
/// bitsets; the diagonal bit is set exactly at self-orthogonal vertices, so a
/// loop contributes 1 to both the degree (row popcount) and the trace.
class OrthoGraph {
 public:
  /// Cap on p^t when building the full graph; bounds adjacency memory.
  static constexpr std::size_t kDefaultBuildCap = std::size_t{1} << 16;

  /// G(p,t): all p^t - 1 nonzero vectors of F_p^t in lexicographic label
  /// order, adjacency (including loops) by orthogonality.
  static OrthoGraph full_graph(PrimeModulus p, std::uint32_t t,
                               std::size_t cap = kDefaultBuildCap);

  /// Graph induced by an arbitrary collection of pairwise distinct vectors
  /// over a common F_p^d. Loops appear iff self-orthogonal vectors appear.
  static OrthoGraph induced(std::span<const FieldVector> vectors);
  static OrthoGraph induced(const VectorSet& vs) { return induced(vs.vectors()); }

  std::size_t size() const { return rows_.size(); }
  std::size_t loop_count() const { return loop_count_; }

  const DynBitset& row(std::size_t i) const { return rows_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  bool loop_at(std::size_t i) const { return rows_[i].test(i); }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }
  std::vector<std::size_t> degrees() const;

  const FieldVector& label(std::size_t i) const { return labels_[i]; }
  std::span<const FieldVector> labels() const { return labels_; }

  /// (p, t) when built by full_graph; empty for induced graphs.
  std::optional<std::pair<std::uint64_t, std::uint32_t>> full_params() const {
    return full_params_;
  }

  /// Plain-text edge list: header `GRAPH n=<n> loops=<L>`, then `i i` loop
  /// lines and `i j` (i<j) edge lines in row order, 0-based indices.
  std::string export_edge_list() const;

 private:
  OrthoGraph() = default;
  static OrthoGraph from_labels(std::vector<FieldVector> labels);

  std::vector<FieldVector> labels_;
  std::vector<DynBitset> rows_;
  std::size_t loop_count_ = 0;
  std::optional<std::pair<std::uint64_t, std::uint32_t>> full_params_;
};

/// p^t with overflow detection against `cap`.
std::size_t checked_pow(std::uint64_t p, std::uint32_t t, std::size_t cap);

}  // namespace noset
