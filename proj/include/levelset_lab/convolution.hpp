#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "levelset_lab/function.hpp"
#include "levelset_lab/group.hpp"

namespace lsl {

/// Convolution along group addition, computed through the transform
/// (pointwise product of spectra).  Matches the direct oracle to
/// absolute 1e-6 * N.
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

/// Direct pair-enumeration oracle, O(N^2).
GroupFunction convolve_direct(const GroupFunction& f, const GroupFunction& g);

/// Exact integer convolution counts for indicator sets:
/// result[x] = #{(a,b) in A x B : a + b = x}.
std::vector<int64_t> convolve_indicator(const IndicatorSet& a, const IndicatorSet& b);

/// Single value of the indicator convolution, O(N/64) on cyclic groups.
int64_t convolve_indicator_at(const IndicatorSet& a, const IndicatorSet& b, int64_t x);

/// An arbitrary binary operation T : G x G -> G as a dense table.
/// Desk scale only; construction refuses carriers above 2048 elements.
class OperationTable {
 public:
  OperationTable(Group g, std::vector<int32_t> table);
  static OperationTable from_function(Group g,
                                      const std::function<int64_t(int64_t, int64_t)>& t);
  static OperationTable addition(const Group& g);
  static OperationTable left_projection(const Group& g);   // T(a,b) = a
  static OperationTable constant(const Group& g, int64_t x0);

  const Group& group() const { return group_; }
  int64_t apply(int64_t a, int64_t b) const {
    return table_[a * group_.order() + b];
  }

 private:
  Group group_;
  std::vector<int32_t> table_;
};

/// T-convolution by direct enumeration: x -> sum_{T(a,b)=x} f(a) g(b).
GroupFunction t_convolve(const GroupFunction& f, const GroupFunction& g,
                         const OperationTable& t);

std::vector<int64_t> t_convolve_indicator(const IndicatorSet& a, const IndicatorSet& b,
                                          const OperationTable& t);

struct Kappa {
  int64_t k1;  // max_{x,a} #{b : T(a,b) = x}
  int64_t k2;  // max_{x,a} #{b : T(b,a) = x}
  int64_t k;   // max(k1, k2)
};

Kappa kappa(const OperationTable& t);

IndicatorSet sumset(const IndicatorSet& a, const IndicatorSet& b);

enum class Strictness { Strict, Weak };

struct LevelSet {
  double threshold;
  Strictness strictness;
  IndicatorSet members;
};

LevelSet level_set(const GroupFunction& conv, double threshold, Strictness s);
LevelSet level_set(const Group& g, const std::vector<int64_t>& conv, double threshold,
                   Strictness s);

/// Both sides of the L^2 proximity bound for convolutions of nearby
/// functions: sum_x |g*g - h*h|^2 vs d1^2 (4 theta + d1) N^3 with
/// d1 = uniformity(g - h) and theta = E(g).
struct ConvolutionProximity {
  double lhs;
  double rhs;
  double delta1;
  double theta;
  bool holds;
};

ConvolutionProximity convolution_proximity_check(const GroupFunction& g,
                                                 const GroupFunction& h);

}  // namespace lsl
