#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace noset {

/// Unsigned arbitrary-precision integer, just large enough for exact
/// enumeration counts and small closed-form products (binomials, powers).
/// Limbs are base 2^32, little-endian, normalized (no trailing zero limbs).
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t v);  // NOLINT: implicit by design, counts start as literals

  bool is_zero() const { return limbs_.empty(); }

  BigUint& operator+=(const BigUint& rhs);
  BigUint& operator+=(std::uint64_t rhs) { return *this += BigUint(rhs); }
  BigUint& mul_u32(std::uint32_t f);
  /// Exact division; the remainder must be zero (used for binomial recurrences).
  BigUint& div_exact_u32(std::uint32_t q);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) { return lhs += rhs; }

  std::strong_ordering operator<=>(const BigUint& rhs) const;
  bool operator==(const BigUint& rhs) const = default;

  /// log2 of the value; -infinity for zero.
  double log2() const;

  std::string str() const;  // decimal

  /// Value as u64 if it fits (throws otherwise); for tests and small counts.
  std::uint64_t to_u64() const;

  static BigUint binomial(std::uint64_t n, std::uint64_t k);
  static BigUint power(std::uint64_t base, std::uint64_t exp);

 private:
  void normalize();
  std::vector<std::uint32_t> limbs_;
};

}  // namespace noset
