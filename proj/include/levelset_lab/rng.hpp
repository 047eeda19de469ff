#pragma once

/* Counter-based random streams (Philox4x32-10).
 *
 * Every randomized experiment derives its draws from (seed, stream id,
 * counter), so results are reproducible bit-for-bit regardless of how
 * trials are scheduled.  The generator is pinned by algorithm, not by
 * library: Philox4x32 with 10 rounds exactly as in Salmon et al.,
 * "Parallel random numbers: as easy as 1, 2, 3" (SC'11).
 */

#include <array>
#include <cstdint>

namespace lsl {

namespace philox {

inline constexpr uint32_t kMul0 = 0xD2511F53u;
inline constexpr uint32_t kMul1 = 0xCD9E8D57u;
inline constexpr uint32_t kWeyl0 = 0x9E3779B9u;
inline constexpr uint32_t kWeyl1 = 0xBB67AE85u;

inline std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                     std::array<uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    const uint64_t p0 = uint64_t(kMul0) * ctr[0];
    const uint64_t p1 = uint64_t(kMul1) * ctr[2];
    ctr = {uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], uint32_t(p1),
           uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], uint32_t(p0)};
  }
  return ctr;
}

}  // namespace philox

// SplitMix64 finalizer, used only to derive child stream ids.
inline uint64_t mix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class RandomStream {
 public:
  explicit RandomStream(uint64_t seed, uint64_t stream = 0)
      : seed_(seed), stream_(stream) {}

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  // Independent child stream; deterministic in (seed, stream, tag).
  RandomStream fork(uint64_t tag) const {
    return RandomStream(seed_, mix64(stream_ ^ mix64(tag)));
  }

  uint32_t next_u32() {
    if (pos_ == 4) {
      buf_ = philox::block(
          {uint32_t(block_), uint32_t(block_ >> 32), uint32_t(stream_),
           uint32_t(stream_ >> 32)},
          {uint32_t(seed_), uint32_t(seed_ >> 32)});
      ++block_;
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  uint64_t next_u64() {
    const uint64_t lo = next_u32();
    return lo | (uint64_t(next_u32()) << 32);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform in [0, n) via rejection.
  uint64_t below(uint64_t n) {
    const uint64_t zone = n * (~uint64_t(0) / n);  // largest multiple of n
    uint64_t v = next_u64();
    while (v >= zone) v = next_u64();
    return v % n;
  }

  int64_t uniform_int(int64_t lo, int64_t hi) {  // inclusive bounds
    return lo + int64_t(below(uint64_t(hi - lo + 1)));
  }

  double uniform_real(double a, double b) { return a + (b - a) * next_double(); }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buf_{};
  int pos_ = 4;
};

}  // namespace lsl
