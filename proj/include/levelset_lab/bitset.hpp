#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lsl {

// Fixed-size bit vector with the cyclic-shift operations the set
// arithmetic needs.  Tail bits past size() are kept zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int64_t n) : n_(n), w_((n + 63) / 64, 0) {
    if (n < 0) throw std::invalid_argument("Bitset: negative size");
  }

  int64_t size() const { return n_; }

  bool test(int64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(int64_t i, bool v = true) {
    const uint64_t m = uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  void reset() { std::fill(w_.begin(), w_.end(), 0); }

  int64_t count() const {
    int64_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }

  bool operator==(const Bitset&) const = default;

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }

  Bitset operator~() const {
    Bitset r = *this;
    for (auto& w : r.w_) w = ~w;
    r.mask_tail();
    return r;
  }

  int64_t and_count(const Bitset& o) const {
    int64_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  // Count of bits set here but not in o (support growth in the witness loop).
  int64_t andnot_count(const Bitset& o) const {
    int64_t c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & ~o.w_[i]);
    return c;
  }

  // Cyclic rotation on n bits: result bit (i + t) mod n = bit i.
  Bitset rotated(int64_t t) const {
    if (n_ == 0) return *this;
    t %= n_;
    if (t < 0) t += n_;
    if (t == 0) return *this;
    Bitset r = shifted_up(t);
    r |= shifted_down(n_ - t);
    return r;
  }

  // Image under negation mod n: result bit (n - i) mod n = bit i.
  Bitset negated_index() const {
    Bitset r(n_);
    for (int64_t i = find_first(); i >= 0; i = find_next(i))
      r.set(i == 0 ? 0 : n_ - i);
    return r;
  }

  int64_t find_first() const { return find_from(0); }

  int64_t find_next(int64_t i) const { return find_from(i + 1); }

 private:
  void mask_tail() {
    const int tail = int(n_ & 63);
    if (tail && !w_.empty()) w_.back() &= (uint64_t(1) << tail) - 1;
  }

  Bitset shifted_up(int64_t k) const {  // bit i -> bit i + k, overflow dropped
    Bitset r(n_);
    const int64_t wd = k >> 6;
    const int bs = int(k & 63);
    for (int64_t i = int64_t(w_.size()) - 1; i >= wd; --i) {
      uint64_t v = w_[i - wd] << bs;
      if (bs && i - wd - 1 >= 0) v |= w_[i - wd - 1] >> (64 - bs);
      r.w_[i] = v;
    }
    r.mask_tail();
    return r;
  }

  Bitset shifted_down(int64_t k) const {  // bit i -> bit i - k, underflow dropped
    Bitset r(n_);
    const int64_t wd = k >> 6;
    const int bs = int(k & 63);
    for (int64_t i = 0; i + wd < int64_t(w_.size()); ++i) {
      uint64_t v = w_[i + wd] >> bs;
      if (bs && i + wd + 1 < int64_t(w_.size())) v |= w_[i + wd + 1] << (64 - bs);
      r.w_[i] = v;
    }
    return r;
  }

  int64_t find_from(int64_t i) const {
    if (i >= n_) return -1;
    int64_t wi = i >> 6;
    uint64_t w = w_[wi] & (~uint64_t(0) << (i & 63));
    while (true) {
      if (w) return (wi << 6) + std::countr_zero(w);
      if (++wi == int64_t(w_.size())) return -1;
      w = w_[wi];
    }
  }

  int64_t n_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace lsl
