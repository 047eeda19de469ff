#include "levelset_lab/bohr.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "levelset_lab/numtheory.hpp"

namespace lsl {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BohrSet::BohrSet(Group g, std::vector<int64_t> frequency_char_indices, double radius)
    : group_(std::move(g)), freqs_(std::move(frequency_char_indices)), radius_(radius) {
  if (radius_ < 0.0 || radius_ > 2.0)
    throw std::invalid_argument("BohrSet: radius must lie in [0,2]");
  for (int64_t f : freqs_)
    if (f < 0 || f >= group_.order())
      throw std::invalid_argument("BohrSet: frequency index out of range");
}

bool BohrSet::contains(int64_t x) const {
  for (int64_t f : freqs_)
    if (group_.char_distance(f, x) > radius_) return false;
  return true;
}

const IndicatorSet& BohrSet::members() const {
  if (!members_) {
    IndicatorSet m(group_);
    for (int64_t x = 0; x < group_.order(); ++x)
      if (contains(x)) m.insert(x);
    members_ = std::move(m);
  }
  return *members_;
}

double bohr_cardinality_bound(int d, double r, int64_t n) {
  if (d < 0 || r < 0.0 || r > 2.0)
    throw std::invalid_argument("bohr_cardinality_bound: bad arguments");
  return std::pow(r / kTwoPi, double(d)) * double(n);
}

int64_t dirichlet_simultaneous(const std::vector<int64_t>& xs, int64_t n) {
  if (n < 2) throw std::invalid_argument("dirichlet_simultaneous: N must be >= 2");
  if (xs.empty()) throw std::invalid_argument("dirichlet_simultaneous: need k >= 1");
  for (int64_t x : xs)
    if (x < 0 || x >= n)
      throw std::invalid_argument("dirichlet_simultaneous: residue out of range");
  const double bound =
      std::pow(double(n), 1.0 - 1.0 / (double(xs.size()) + 1.0));
  for (int64_t m = 1; m < n; ++m) {
    bool ok = true;
    for (int64_t x : xs) {
      if (std::abs(double(least_abs_residue(m * x, n))) > bound) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  throw std::logic_error("dirichlet_simultaneous: scan exhausted (bug)");
}

std::vector<int64_t> ArithmeticProgression::elements(const Group& g) const {
  std::vector<int64_t> v;
  v.reserve(length);
  int64_t x = start;
  for (int64_t j = 0; j < length; ++j) {
    v.push_back(x);
    x = g.add(x, step);
  }
  return v;
}

ArithmeticProgression ap_in_bohr(const BohrSet& b) {
  const Group& g = b.group();
  const int64_t n = g.order();
  if (g.rank() != 1 || !is_prime(n))
    throw std::invalid_argument("ap_in_bohr: group must be Z_N with N prime");
  const int d = b.dimension();
  if (d < 1) throw std::invalid_argument("ap_in_bohr: need at least one frequency");
  if (!(b.radius() > 0)) throw std::invalid_argument("ap_in_bohr: radius must be > 0");

  const auto full = [&]() {
    return ArithmeticProgression{(n - (n - 1) / 2) % n, 1, n};
  };

  // Best multiplier: minimize the worst residue over the frequencies.
  const auto& freqs = b.frequencies();
  int64_t best_n = 1;
  int64_t best_m = -1;
  for (int64_t m = 1; m < n; ++m) {
    int64_t worst = 0;
    for (int64_t a : freqs)
      worst = std::max(worst, std::abs(least_abs_residue(m * a, n)));
    if (best_m < 0 || worst < best_m) {
      best_m = worst;
      best_n = m;
    }
    if (best_m == 0) break;
  }
  if (best_m == 0) return full();  // all frequencies principal

  // Small-angle floor, then extend while exact membership holds.
  const int64_t max_j = (n - 1) / 2;
  int64_t j = int64_t(std::floor(b.radius() * double(n) / (kTwoPi * double(best_m))));
  if (j > max_j) j = max_j;
  int64_t probe = (j + 1) * best_n % n;
  while (j < max_j && b.contains(probe)) {
    ++j;
    probe = (probe + best_n) % n;
  }
  const int64_t length = 2 * j + 1;
  if (length >= n) return full();

  const double required = std::floor(b.radius() * std::pow(double(n), 1.0 / d) / kTwoPi);
  if (double(length) < required)
    throw std::logic_error("ap_in_bohr: length bound missed (bug)");

  const int64_t start = (n - (j * best_n) % n) % n;
  return ArithmeticProgression{start, best_n, length};
}

}  // namespace lsl
