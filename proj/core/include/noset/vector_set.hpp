#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "noset/field.hpp"

namespace noset {

/// Where a set came from. Constructed sets carry the full parameter record so
/// a run can be reproduced from its output file alone.
struct Provenance {
  enum class Kind { Manual, Constructed };
  Kind kind = Kind::Manual;

  // Constructed only.
  std::uint64_t seed = 0;
  std::uint32_t t = 0;
  std::uint32_t m = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t ell = 0;
  double c = 1.0;
  std::uint32_t retry = 0;

  static Provenance manual() { return Provenance{}; }
};

/// Ordered, deduplicated, all-non-self-orthogonal collection of vectors of a
/// common F_p^d. Rows are kept in lexicographic order, which makes the file
/// encoding canonical and byte-exact.
class VectorSet {
 public:
  /// Sorts, then validates: common modulus and dimension, no duplicates, no
  /// self-orthogonal vectors. Error messages reference 1-based positions in
  /// the input order.
  static VectorSet create(PrimeModulus p, std::size_t dim, std::vector<FieldVector> vectors,
                          Provenance provenance = Provenance::manual());

  const PrimeModulus& modulus() const { return modulus_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  bool empty() const { return vectors_.empty(); }
  std::span<const FieldVector> vectors() const { return vectors_; }
  const FieldVector& operator[](std::size_t i) const { return vectors_[i]; }
  const Provenance& provenance() const { return provenance_; }

  /// Canonical NOSET encoding (see README): header, provenance comment, then
  /// one row per vector in lexicographic order.
  std::string to_text() const;

  /// Strict parser. Rejects malformed headers, residues >= p, duplicate rows
  /// and self-orthogonal rows, naming the offending 1-based data row.
  static VectorSet parse_text(std::string_view text);

  void write_file(const std::filesystem::path& path) const;
  static VectorSet read_file(const std::filesystem::path& path);

 private:
  VectorSet(PrimeModulus p, std::size_t dim, std::vector<FieldVector> vectors, Provenance prov)
      : modulus_(p), dim_(dim), vectors_(std::move(vectors)), provenance_(prov) {}

  PrimeModulus modulus_;
  std::size_t dim_;
  std::vector<FieldVector> vectors_;
  Provenance provenance_;
};

/// Shortest decimal that round-trips the value; canonical across runs.
std::string format_real(double v);

}  // namespace noset
