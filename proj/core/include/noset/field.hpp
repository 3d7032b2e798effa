#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "noset/rng.hpp"

namespace noset {

/// A prime p >= 2, validated by trial division at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);

  std::uint32_t value() const { return p_; }
  bool operator==(const PrimeModulus&) const = default;

 private:
  std::uint32_t p_;
};

/// A vector over F_p. Coordinates are canonical residues in [0, p-1];
/// dimension is at least 1. Immutable after construction.
class FieldVector {
 public:
  FieldVector(PrimeModulus modulus, std::vector<std::uint32_t> coords);

  const PrimeModulus& modulus() const { return modulus_; }
  std::size_t dim() const { return coords_.size(); }
  std::span<const std::uint32_t> coords() const { return coords_; }
  std::uint32_t operator[](std::size_t i) const { return coords_[i]; }

  /// Lexicographic order on coordinates; callers compare only vectors
  /// sharing a modulus and a dimension.
  std::strong_ordering operator<=>(const FieldVector& rhs) const {
    if (auto c = coords_ <=> rhs.coords_; c != 0) return c;
    return modulus_.value() <=> rhs.modulus_.value();
  }
  bool operator==(const FieldVector& rhs) const {
    return modulus_ == rhs.modulus_ && coords_ == rhs.coords_;
  }

 private:
  PrimeModulus modulus_;
  std::vector<std::uint32_t> coords_;
};

/// <u,v> = sum u_i v_i mod p, as a canonical residue.
std::uint32_t inner_product(const FieldVector& u, const FieldVector& v);

bool is_self_orthogonal(const FieldVector& u);

/// m-fold tensor product. Output dimension is the product of input
/// dimensions; indexing is row-major with the first factor slowest, which is
/// normative for the file format.
FieldVector tensor_product(std::span<const FieldVector> factors);

/// Uniform vector of F_p^t.
FieldVector sample_vector(PrimeModulus p, std::size_t t, SplitMix64& rng);

/// Uniform non-self-orthogonal vector of F_p^t, by rejection over uniform
/// vectors. Acceptance probability is at least 1/p, so the 10^6 cap on
/// rejections is unreachable in practice.
FieldVector sample_nso_vector(PrimeModulus p, std::size_t t, SplitMix64& rng);

}  // namespace noset
