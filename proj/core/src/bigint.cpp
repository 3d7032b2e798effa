#include "noset/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noset/error.hpp"

namespace noset {

BigUint::BigUint(std::uint64_t v) {
  if (v != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }
}

void BigUint::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUint& BigUint::operator+=(const BigUint& rhs) {
  const std::size_t n = std::max(limbs_.size(), rhs.limbs_.size());
  limbs_.resize(n, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < rhs.limbs_.size()) sum += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::mul_u32(std::uint32_t f) {
  if (f == 0) {
    limbs_.clear();
    return *this;
  }
  std::uint64_t carry = 0;
  for (auto& limb : limbs_) {
    const std::uint64_t prod = static_cast<std::uint64_t>(limb) * f + carry;
    limb = static_cast<std::uint32_t>(prod);
    carry = prod >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUint& BigUint::div_exact_u32(std::uint32_t q) {
  if (q == 0) raise(Errc::InvalidArgument, "division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    const std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / q);
    rem = cur % q;
  }
  if (rem != 0) raise(Errc::Internal, "div_exact_u32 with nonzero remainder");
  normalize();
  return *this;
}

std::strong_ordering BigUint::operator<=>(const BigUint& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() <=> rhs.limbs_.size();
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] <=> rhs.limbs_[i];
  }
  return std::strong_ordering::equal;
}

double BigUint::log2() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // Top 96 bits are plenty for a double mantissa.
  const std::size_t top = limbs_.size() - 1;
  double x = limbs_[top];
  std::size_t used = 1;
  if (top >= 1) x = x * 4294967296.0 + limbs_[top - 1], ++used;
  if (top >= 2) x = x * 4294967296.0 + limbs_[top - 2], ++used;
  const std::size_t dropped = top + 1 - used;
  return std::log2(x) + 32.0 * static_cast<double>(dropped);
}

std::string BigUint::str() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> tmp = limbs_;
  std::string out;
  while (!tmp.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = tmp.size(); i-- > 0;) {
      const std::uint64_t cur = (rem << 32) | tmp[i];
      tmp[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!tmp.empty() && tmp.back() == 0) tmp.pop_back();
    char buf[16];
    if (tmp.empty())
      std::snprintf(buf, sizeof buf, "%llu", static_cast<unsigned long long>(rem));
    else
      std::snprintf(buf, sizeof buf, "%09llu", static_cast<unsigned long long>(rem));
    out.insert(0, buf);
  }
  return out;
}

std::uint64_t BigUint::to_u64() const {
  if (limbs_.size() > 2) raise(Errc::InvalidArgument, "BigUint does not fit in u64");
  std::uint64_t v = 0;
  if (limbs_.size() >= 2) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

BigUint BigUint::binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigUint(0);
  if (k > n - k) k = n - k;
  BigUint c(1);
  for (std::uint64_t i = 0; i < k; ++i) {
    const std::uint64_t factor = n - i;
    if (factor >> 32) raise(Errc::InvalidArgument, "binomial argument too large");
    c.mul_u32(static_cast<std::uint32_t>(factor));
    c.div_exact_u32(static_cast<std::uint32_t>(i + 1));
  }
  return c;
}

BigUint BigUint::power(std::uint64_t base, std::uint64_t exp) {
  if (base >> 32) raise(Errc::InvalidArgument, "power base too large");
  BigUint r(1);
  for (std::uint64_t i = 0; i < exp; ++i) r.mul_u32(static_cast<std::uint32_t>(base));
  return r;
}

}  // namespace noset
