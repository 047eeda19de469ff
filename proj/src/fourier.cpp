#include "levelset_lab/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace lsl {

namespace {

constexpr double kPi = std::numbers::pi;

// Iterative radix-2 transform; n must be a power of two.
void dft_pow2(std::vector<cplx>& a, int sign) {
  const size_t n = a.size();
  if (n < 2) return;
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cplx> roots(n / 2);
  for (size_t k = 0; k < n / 2; ++k)
    roots[k] = std::polar(1.0, sign * 2.0 * kPi * double(k) / double(n));
  for (size_t len = 2; len <= n; len <<= 1) {
    const size_t step = n / len;
    for (size_t i = 0; i < n; i += len) {
      for (size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * roots[k * step];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

// Chirp-z reduction of an arbitrary-length DFT to a power-of-two
// circular convolution.
void dft_bluestein(std::vector<cplx>& a, int sign) {
  const size_t n = a.size();
  size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cplx> chirp(n);  // chirp[t] = e^{sign*pi*i*t^2/n}
  for (size_t t = 0; t < n; ++t) {
    const uint64_t t2 = (uint64_t(t) * t) % (2 * n);
    chirp[t] = std::polar(1.0, sign * kPi * double(t2) / double(n));
  }

  std::vector<cplx> b(m, cplx(0, 0)), c(m, cplx(0, 0));
  for (size_t t = 0; t < n; ++t) b[t] = a[t] * chirp[t];
  c[0] = cplx(1, 0);
  for (size_t t = 1; t < n; ++t) c[t] = c[m - t] = std::conj(chirp[t]);

  dft_pow2(b, 1);
  dft_pow2(c, 1);
  for (size_t i = 0; i < m; ++i) b[i] *= c[i];
  dft_pow2(b, -1);
  for (size_t k = 0; k < n; ++k) a[k] = b[k] * chirp[k] / double(m);
}

void transform_axes(const Group& g, std::vector<cplx>& values, int sign) {
  const auto& orders = g.cyclic_orders();
  const int64_t total = g.order();
  std::vector<cplx> line;
  int64_t stride = 1;
  for (int j = int(orders.size()) - 1; j >= 0; --j) {
    const int64_t n = orders[j];
    if (n > 1) {
      line.resize(n);
      const int64_t block = stride * n;
      for (int64_t base = 0; base < total; base += block) {
        for (int64_t off = 0; off < stride; ++off) {
          for (int64_t t = 0; t < n; ++t) line[t] = values[base + off + t * stride];
          detail::dft_1d(line, sign);
          for (int64_t t = 0; t < n; ++t) values[base + off + t * stride] = line[t];
        }
      }
    }
    stride *= n;
  }
}

std::vector<int64_t> magnitude_order(const std::vector<cplx>& coeffs) {
  std::vector<int64_t> order(coeffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int64_t a, int64_t b) {
    const double ma = std::abs(coeffs[a]), mb = std::abs(coeffs[b]);
    if (ma != mb) return ma > mb;
    return a < b;
  });
  return order;
}

}  // namespace

namespace detail {

void dft_1d(std::vector<cplx>& a, int sign) {
  const size_t n = a.size();
  if (n < 2) return;
  if (std::has_single_bit(n))
    dft_pow2(a, sign);
  else
    dft_bluestein(a, sign);
}

}  // namespace detail

double Spectrum::max_nontrivial() const {
  double m = 0;
  for (size_t i = 1; i < coeffs.size(); ++i) m = std::max(m, std::abs(coeffs[i]));
  return m;
}

Spectrum fourier_transform(const GroupFunction& f) {
  std::vector<cplx> coeffs = f.values();
  transform_axes(f.group(), coeffs, +1);
  auto order = magnitude_order(coeffs);
  return Spectrum{f.group(), std::move(coeffs), std::move(order)};
}

Spectrum fourier_transform_direct(const GroupFunction& f) {
  const Group& g = f.group();
  const int64_t n = g.order();
  std::vector<cplx> coeffs(n, cplx(0, 0));
  if (g.rank() == 1) {
    std::vector<cplx> root(n);
    for (int64_t r = 0; r < n; ++r)
      root[r] = std::polar(1.0, 2.0 * kPi * double(r) / double(n));
    for (int64_t a = 0; a < n; ++a) {
      cplx acc(0, 0);
      int64_t r = 0;
      for (int64_t x = 0; x < n; ++x) {
        acc += f[x] * root[r];
        r += a;
        if (r >= n) r -= n;
      }
      coeffs[a] = acc;
    }
  } else {
    for (int64_t a = 0; a < n; ++a) {
      cplx acc(0, 0);
      for (int64_t x = 0; x < n; ++x) acc += f[x] * g.char_eval(a, x);
      coeffs[a] = acc;
    }
  }
  auto order = magnitude_order(coeffs);
  return Spectrum{g, std::move(coeffs), std::move(order)};
}

GroupFunction inverse_fourier(const Spectrum& s) {
  std::vector<cplx> values = s.coeffs;
  transform_axes(s.group, values, -1);
  const double n = double(s.group.order());
  for (cplx& v : values) v /= n;
  return GroupFunction(s.group, std::move(values));
}

double uniformity(const GroupFunction& f) {
  const Spectrum s = fourier_transform(f);
  double m = 0;
  for (const cplx& c : s.coeffs) m = std::max(m, std::abs(c));
  return m / double(f.order());
}

std::pair<bool, double> top_k_decay_check(const GroupFunction& f, int64_t k) {
  const int64_t n = f.order();
  if (k < 1 || k > n) throw std::invalid_argument("top_k_decay_check: k out of range");
  if (!f.in_unit_interval(1e-12))
    throw std::invalid_argument("top_k_decay_check: f must map into [0,1]");
  const Spectrum s = fourier_transform(f);
  const double mag = s.magnitude(s.order[k - 1]);
  const double mean = f.sum().real() / double(n);
  const double bound = double(n) * std::sqrt(std::max(mean, 0.0) / double(k));
  // Equality is attained (e.g. constant functions), so give the float
  // comparison a hair of slack.
  return {mag <= bound * (1.0 + 1e-9) + 1e-12, mag};
}

FourierSignature fourier_signature(const IndicatorSet& a, int64_t k, double quantum) {
  if (k < 1 || k > a.order())
    throw std::invalid_argument("fourier_signature: k out of range");
  if (!(quantum > 0)) throw std::invalid_argument("fourier_signature: quantum must be > 0");
  const Spectrum s = fourier_transform(a.to_function());
  FourierSignature sig;
  sig.k = k;
  sig.quantum = quantum;
  sig.top_chars.assign(s.order.begin(), s.order.begin() + k);
  sig.rounded.reserve(2 * k);
  for (int64_t i = 0; i < k; ++i) {
    const cplx c = s.coeffs[sig.top_chars[i]];
    sig.rounded.push_back(std::round(c.real() / quantum) * quantum);
    sig.rounded.push_back(std::round(c.imag() / quantum) * quantum);
  }
  return sig;
}

}  // namespace lsl
