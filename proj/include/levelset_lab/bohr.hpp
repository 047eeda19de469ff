#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "levelset_lab/function.hpp"
#include "levelset_lab/group.hpp"

namespace lsl {

/// Bohr neighborhood B(Lambda, r) = {x : |1 - chi(x)| <= r for all chi in
/// Lambda}.  Membership is evaluated lazily; members() enumerates and
/// caches the full set.
class BohrSet {
 public:
  BohrSet(Group g, std::vector<int64_t> frequency_char_indices, double radius);

  const Group& group() const { return group_; }
  const std::vector<int64_t>& frequencies() const { return freqs_; }
  int dimension() const { return int(freqs_.size()); }
  double radius() const { return radius_; }

  bool contains(int64_t x) const;
  const IndicatorSet& members() const;

 private:
  Group group_;
  std::vector<int64_t> freqs_;
  double radius_;
  mutable std::optional<IndicatorSet> members_;
};

/// Lower bound (r/2pi)^d * N on |B(Lambda, r)|.
double bohr_cardinality_bound(int d, double r, int64_t n);

/// Smallest n in [1, N) with max_i ||n x_i|| <= N^{1-1/(k+1)}, where
/// ||.|| is the least absolute residue.  Existence is the box-principle
/// lemma; scan exhaustion signals an implementation bug.
int64_t dirichlet_simultaneous(const std::vector<int64_t>& xs, int64_t n);

struct ArithmeticProgression {
  int64_t start;   // element index
  int64_t step;    // element index
  int64_t length;  // >= 1

  std::vector<int64_t> elements(const Group& g) const;
};

/// An AP centered at 0 inside the Bohr set, of length at least
/// floor(r N^{1/d} / 2pi).  Requires a prime cyclic group and d >= 1.
///
/// The step is the multiplier n minimizing max_i ||n a_i|| (the
/// box-principle guarantees a good one exists); the reach is first taken
/// from the small-angle bound |1-e^{i phi}| <= |phi| and then extended by
/// exact membership checks.
ArithmeticProgression ap_in_bohr(const BohrSet& b);

}  // namespace lsl
