#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "levelset_lab/convolution.hpp"
#include "levelset_lab/function.hpp"

namespace lsl {

using NormFn = std::function<double(const GroupFunction&)>;

/// The Fourier-sup norm ||g|| = N^{-1} max_chi |g^(chi)| used throughout
/// the abelian/addition case.
NormFn fourier_sup_norm();

/// Enumerable stand-in for the quantifier "every B with
/// ||1_A - 1_B|| <= delta1".
struct CandidateFamily {
  enum class Mode { ExplicitList, Exhaustive, TranslatesOfA };

  Mode mode;
  std::vector<IndicatorSet> sets;

  static CandidateFamily explicit_list(std::vector<IndicatorSet> sets);
  /// All 2^N subsets; refuses N > 22.
  static CandidateFamily exhaustive(const Group& g);
  static CandidateFamily translates_of(const IndicatorSet& a,
                                       const std::vector<int64_t>& shifts);
};

struct WitnessIteration {
  int64_t iteration;         // 1-based; records the step producing f_{j+1}
  int64_t pair_b, pair_c;    // admitted-family positions of the violating pair
  int64_t chosen_set_index;  // family index of the set that was added
  char chosen_side;          // 'B' or 'C'
  int64_t violating_x;
  int64_t support_size;      // |supp(f_{j+1})|
  int64_t support_growth;
};

struct WitnessResult {
  Group group;
  std::vector<int64_t> multiplicity;  // f_J, integer-valued
  int64_t j_count;                    // J
  std::vector<WitnessIteration> trace;
  int64_t kappa;                      // cached kappa(T)
  std::vector<int64_t> admitted;      // family indices passing the norm filter

  /// f = J^{-1} * multiplicity, mapping into [0,1].
  GroupFunction f() const;
};

/// Iterative witness construction.  Starting from f_1 = 1_A, while some
/// admitted pair (B, C) and point x satisfy
///     1_B *_T 1_C(x) > f_j *_T f_j(x) + 2 kappa delta2 N,
/// add whichever of 1_B, 1_C grows the support more (ties pick B).  Scan
/// order is fixed: pairs in family order, x in element order; the first
/// violation drives the step.  Terminates with J <= ceil(1/delta2) and
///     1_B *_T 1_C(x) <= delta2^{-2} f *_T f(x) + 2 kappa delta2 N
/// for every admitted pair and every x, plus norm(f - 1_A) <= delta1.
WitnessResult build_witness(const IndicatorSet& a, const CandidateFamily& family,
                            const NormFn& norm, const OperationTable& t,
                            double delta1, double delta2);

/// Independent recheck of both build_witness post-conditions.
bool verify_witness(const WitnessResult& result, const IndicatorSet& a,
                    const CandidateFamily& family, const NormFn& norm,
                    const OperationTable& t, double delta1, double delta2);

/// Intersection of the level-sets {x : 1_B*1_B(x) <= gamma theta^2 N}
/// over the family members B with uniformity(1_A - 1_B) <= delta,
/// theta = |A|/N.  Addition convolution, exact integer counts.
IndicatorSet levelset_intersection(const IndicatorSet& a, const CandidateFamily& family,
                                   double gamma, double delta);

/// Lower bound from the level-set intersection corollary:
/// |{x : 1_A*1_A(x) <= gamma^3 theta^6 N / 128}| -
/// 2^14 gamma^-6 theta^-12 delta^2 (4 theta + delta) N.
double levelset_intersection_bound(const IndicatorSet& a, double gamma, double delta);

}  // namespace lsl
