#pragma once

/* Fourier analysis over finite abelian groups.
 *
 * Convention: the transform is unnormalized and uses the character
 * itself (positive phase), f^(chi) = sum_x f(x) chi(x), so the inverse
 * divides by N and conjugates.  The fast path factorizes the transform
 * across the cyclic factors, handling each axis with radix-2
 * Cooley-Tukey when the length is a power of two and Bluestein's
 * chirp-z reduction otherwise; the direct O(N^2) sum stays available as
 * the correctness oracle.
 */

#include <cstdint>
#include <vector>

#include "levelset_lab/function.hpp"
#include "levelset_lab/group.hpp"

namespace lsl {

/// Full table of Fourier coefficients, with a deterministic
/// largest-to-smallest ordering (ties broken by ascending character
/// index).
struct Spectrum {
  Group group;
  std::vector<cplx> coeffs;    // indexed by character index
  std::vector<int64_t> order;  // permutation, descending |coeff|

  double magnitude(int64_t char_index) const { return std::abs(coeffs[char_index]); }

  /// max_{chi != chi_0} |f^(chi)|
  double max_nontrivial() const;
};

Spectrum fourier_transform(const GroupFunction& f);
Spectrum fourier_transform_direct(const GroupFunction& f);
GroupFunction inverse_fourier(const Spectrum& s);

/// N^{-1} max_chi |f^(chi)|; f is alpha-uniform iff this is <= alpha.
double uniformity(const GroupFunction& f);

/// Checks |f^(chi_k)| <= N sqrt(E(f)/k) for the k-th largest coefficient
/// of a [0,1]-valued f (1-based k).  Returns the flag and |f^(chi_k)|.
/// A false return signals an implementation bug, not a property of f.
std::pair<bool, double> top_k_decay_check(const GroupFunction& f, int64_t k);

/// Top-k characters in spectrum order with Re/Im quantized to multiples
/// of `quantum` (rounding half away from zero).
struct FourierSignature {
  int64_t k;
  std::vector<int64_t> top_chars;
  std::vector<double> rounded;  // 2k entries: Re, Im per character
  double quantum;

  bool operator==(const FourierSignature& o) const {
    return k == o.k && top_chars == o.top_chars && rounded == o.rounded &&
           quantum == o.quantum;
  }
};

FourierSignature fourier_signature(const IndicatorSet& a, int64_t k, double quantum);

namespace detail {
/// In-place 1-D DFT of arbitrary length with kernel e^{sign*2*pi*i*jk/n}.
void dft_1d(std::vector<cplx>& a, int sign);
}  // namespace detail

}  // namespace lsl
