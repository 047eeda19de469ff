#pragma once

#include <cstdint>
#include <stdexcept>

namespace lsl {

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

// Least absolute residue: value in (-N/2, N/2], ties at N/2 kept positive.
inline int64_t least_abs_residue(int64_t v, int64_t n) {
  int64_t r = v % n;
  if (r < 0) r += n;
  if (2 * r > n) r -= n;
  return r;
}

inline int64_t mod_pow(int64_t base, int64_t exp, int64_t n) {
  int64_t r = 1 % n;
  base %= n;
  if (base < 0) base += n;
  while (exp > 0) {
    if (exp & 1) r = (__int128(r) * base) % n;
    base = (__int128(base) * base) % n;
    exp >>= 1;
  }
  return r;
}

inline int64_t mod_inverse(int64_t a, int64_t n) {
  int64_t t = 0, new_t = 1, r = n, new_r = a % n;
  if (new_r < 0) new_r += n;
  while (new_r != 0) {
    const int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return t < 0 ? t + n : t;
}

}  // namespace lsl
