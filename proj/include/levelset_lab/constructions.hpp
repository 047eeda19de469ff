#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "levelset_lab/bohr.hpp"
#include "levelset_lab/function.hpp"
#include "levelset_lab/rng.hpp"

namespace lsl {

/// Nonzero quadratic residues mod a prime N; |A| = (N-1)/2 for odd N.
IndicatorSet quadratic_residues(int64_t n);

/// max_{a != 0} |1_A^(a)| for the quadratic-residue set; stays below
/// sqrt(N) + 1 (Gauss-sum scale).  Requires N prime, N = 3 mod 4.
double qr_uniformity_check(int64_t n);

/// Dilated-interval construction showing a probe set of size up to
/// (log N)/2 cannot certify a large sumset: A = n^{-1} * B for a centered
/// interval B with |B| = ceil(N/3) and n the box-principle multiplier for
/// the probes.  The three conclusions are checked exactly; failures are
/// reported as findings, not thrown (they are asymptotic statements).
struct IntervalDilateResult {
  int64_t n_modulus;           // N
  std::vector<int64_t> probes;  // S
  int64_t multiplier;          // n
  int64_t multiplier_inverse;  // n^{-1} mod N
  int64_t interval_size;       // |B| = ceil(N/3)
  IndicatorSet a;
  int64_t sumset_size;
  std::vector<int64_t> probe_convolutions;  // 1_A*1_A(x), x in S
  bool size_ok;      // |A| >= N/3
  bool sumset_ok;    // |A+A| < 2N/3
  bool probes_ok;    // 1_A*1_A(x) > N/6 on S
  std::vector<std::string> findings;
};

IntervalDilateResult interval_dilate_construction(int64_t n,
                                                  const std::vector<int64_t>& probes);
IntervalDilateResult interval_dilate_construction(int64_t n, const IndicatorSet& probes);

/// Shared parameter block for the experiment harnesses.
struct ExperimentConfig {
  std::string group_spec = "Z101";
  double theta = 1.0 / 3;
  double delta = 0.5;
  double eps = 1.0 / 3;
  double gamma = 0.5;
  uint64_t seed = 0;
  int trials = 10;             // candidate / batch budget
  int64_t probe_size = 0;      // K override; 0 = use the formula
  double probe_constant = 1.0;  // c in the K formula

  void validate() const;
  /// floor(c eps^-2 delta^-6 theta^-10 (log N - log(delta theta eps))),
  /// clamped to [1, N].
  int64_t probe_size_formula(int64_t n) const;
};

struct AdversaryFailure {
  int trial;
  std::string kind;
  double theta0;
  int64_t sumset_size;
  int64_t min_convolution_on_s;  // min over x in S0 of 1_A*1_A(x)
};

/// Randomized search for a probing set S0 validated against structured
/// adversaries (interval dilates, Bohr sets, quadratic-residue
/// translates) with theta0 >= theta and |A+A| <= (1-eps)N.  This
/// falsifies rather than certifies: a pass means no tested adversary had
/// a large convolution everywhere on S0.
struct ProbingSetReport {
  IndicatorSet s;
  int64_t k;  // |S0|
  int attempts;          // candidate sets tried
  int adversary_trials;  // per candidate
  int adversaries_tested;
  int adversaries_skipped;  // could not generate a valid adversary
  int64_t hits;             // adversary trials detected by the final S0
  std::vector<AdversaryFailure> failures;  // for earlier, rejected candidates
  bool pass;
};

ProbingSetReport probing_set_search(const ExperimentConfig& cfg, int adversary_trials);

/// Fourier positivity test for a candidate probing set: compares
/// max_{chi != chi_0} |1_S^(chi)| / |S| against (a) the theorem-level
/// threshold (delta^3 theta^4.5 sqrt(eps) / 512 pi)^{2^16 delta^-6
/// theta^-10 eps^-1 + 1} computed in log space and (b) the operative
/// sufficient condition |B'|/N with B' = B(Lambda, rho/2); also verifies
/// directly that g = 1_{B'} * 1_{B'} meets S in every translate.
struct PseudorandomProbeReport {
  double max_ratio;              // max nontrivial |1_S^|/|S|
  double log10_threshold;        // theorem threshold, log10
  bool passes_theorem;
  double rho;                    // delta^3 theta^4.5 sqrt(eps) / 128
  int64_t bohr_prime_size;       // |B'|
  double operative_threshold;    // |B'|/N
  bool passes_operative;
  int64_t min_translate_overlap; // min_t sum_x g(x+t) 1_S(x)
  bool translates_positive;
  bool ok;                       // the direct conclusion: all translates hit
};

PseudorandomProbeReport pseudorandom_probe_check(const IndicatorSet& s,
                                                 const std::vector<int64_t>& lambda,
                                                 double theta, double delta, double eps);

/// Bohr-translate extraction inside the lower level-set: builds
/// B = B(chi_1..chi_k; delta1/theta) from the top-k spectrum of 1_A with
/// delta1 = delta^3 theta^5.5 sqrt(eps)/128 and k = floor(4 delta1^-2
/// theta) + 1 (clamped to N), then searches for x with
/// x - B inside {y : 1_A*1_A(y) < delta theta^2 N}, x scanned by
/// ascending convolution value.  Requires the level-set hypothesis
/// |{x : 1_A*1_A(x) < delta^3 theta^6 N/128}| >= eps N.
struct BohrTranslateResult {
  double delta1;
  double k_formula;        // floor(4 delta1^-2 theta) + 1 before clamping
  int64_t k_used;          // min(k_formula, N)
  double dim_statement;    // 2^16 delta^-6 theta^-10 eps^-1 + 1, for the report
  std::vector<int64_t> bohr_frequencies;
  double bohr_radius;
  int64_t bohr_size;
  int64_t hypothesis_count;  // |{x : conv < delta^3 theta^6 N/128}|
  double level_threshold;    // delta theta^2 N
  bool verified;
  int64_t translate;  // x, valid when verified
};

BohrTranslateResult levelset_bohr_translate(const IndicatorSet& a, double delta,
                                            double eps);

/// Gap check along every AP direction: true iff for every d != 0 and
/// every x with 1_A*1_A(x) >= delta theta^2 N there is 0 < t <= cap with
/// 1_A*1_A(x + d t) >= delta theta^2 N.  Requires Z_N, N prime.
struct GapCheckResult {
  bool all_within;
  int64_t worst_gap;
  int64_t worst_d;
  int64_t worst_x;
  int64_t large_count;  // |{x : conv >= threshold}|
};

GapCheckResult gap_criterion_check(const IndicatorSet& a, double delta, double eps,
                                   int64_t cap);

/// Uniformly random subset of the given size (partial Fisher-Yates).
IndicatorSet random_subset_of_size(const Group& g, int64_t size, RandomStream& rs);

/// Each element kept independently with probability density.
IndicatorSet random_subset_by_density(const Group& g, double density, RandomStream& rs);

}  // namespace lsl
