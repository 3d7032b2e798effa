#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace noset {

/// Fixed-size bitset sized at runtime. Adjacency rows, candidate sets and
/// neighborhood masks all live here; intersections are word-parallel.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(std::size_t n, bool fill = false)
      : n_(n), w_((n + 63) / 64, fill ? ~0ULL : 0ULL) {
    trim();
  }

  std::size_t size() const { return n_; }

  void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ULL << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  DynBitset& operator&=(const DynBitset& rhs) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= rhs.w_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& rhs) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= rhs.w_[i];
    return *this;
  }
  /// this &= ~rhs
  DynBitset& andnot_assign(const DynBitset& rhs) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~rhs.w_[i];
    return *this;
  }

  friend DynBitset operator&(DynBitset lhs, const DynBitset& rhs) { return lhs &= rhs; }

  static std::size_t and_count(const DynBitset& a, const DynBitset& b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.w_[i] & b.w_[i]));
    return c;
  }

  /// First set bit at or after `from`; size() if none.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t word = from >> 6;
    std::uint64_t w = w_[word] & (~0ULL << (from & 63));
    for (;;) {
      if (w) return (word << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++word == w_.size()) return n_;
      w = w_[word];
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t i = next(0); i < n_; i = next(i + 1)) out.push_back(i);
    return out;
  }

  bool operator==(const DynBitset& rhs) const = default;

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
    if (n_ == 0) w_.clear();
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace noset
