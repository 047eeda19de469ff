#include "levelset_lab/witness.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "levelset_lab/fourier.hpp"

namespace lsl {

NormFn fourier_sup_norm() {
  return [](const GroupFunction& g) { return uniformity(g); };
}

CandidateFamily CandidateFamily::explicit_list(std::vector<IndicatorSet> sets) {
  for (size_t i = 1; i < sets.size(); ++i)
    if (!(sets[i].group() == sets[0].group()))
      throw std::invalid_argument("CandidateFamily: sets live on different groups");
  return CandidateFamily{Mode::ExplicitList, std::move(sets)};
}

CandidateFamily CandidateFamily::exhaustive(const Group& g) {
  const int64_t n = g.order();
  if (n > 22) throw std::invalid_argument("CandidateFamily::exhaustive: N > 22");
  std::vector<IndicatorSet> sets;
  sets.reserve(size_t(1) << n);
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    IndicatorSet s{g};
    for (int64_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.insert(i);
    sets.push_back(std::move(s));
  }
  return CandidateFamily{Mode::Exhaustive, std::move(sets)};
}

CandidateFamily CandidateFamily::translates_of(const IndicatorSet& a,
                                               const std::vector<int64_t>& shifts) {
  std::vector<IndicatorSet> sets;
  sets.reserve(shifts.size());
  for (int64_t t : shifts) sets.push_back(a.translated(t));
  return CandidateFamily{Mode::TranslatesOfA, std::move(sets)};
}

GroupFunction WitnessResult::f() const {
  GroupFunction out(group);
  for (int64_t i = 0; i < group.order(); ++i)
    out[i] = cplx(double(multiplicity[i]) / double(j_count), 0.0);
  return out;
}

namespace {

// diff = 1_B - 1_A as a function, for the norm filter.
GroupFunction indicator_difference(const IndicatorSet& b, const IndicatorSet& a) {
  GroupFunction d(a.group());
  for (int64_t i = 0; i < a.order(); ++i)
    d[i] = cplx(double(b.contains(i)) - double(a.contains(i)), 0.0);
  return d;
}

std::vector<int64_t> admitted_indices(const IndicatorSet& a,
                                      const CandidateFamily& family, const NormFn& norm,
                                      double delta1) {
  std::vector<int64_t> admitted;
  for (size_t i = 0; i < family.sets.size(); ++i) {
    if (!(family.sets[i].group() == a.group()))
      throw std::invalid_argument("witness: family set on a different group");
    if (norm(indicator_difference(family.sets[i], a)) <= delta1)
      admitted.push_back(int64_t(i));
  }
  return admitted;
}

void spot_check_norm(const NormFn& norm, const IndicatorSet& a) {
  const GroupFunction u = a.to_function();
  const GroupFunction v = a.complement().to_function();
  const double nu = norm(u), nv = norm(v), nuv = norm(u + v);
  if (nu < 0 || nv < 0 || nuv > nu + nv + 1e-9)
    throw std::invalid_argument("witness: norm fails triangle-inequality spot check");
  if (norm(GroupFunction(a.group())) > 1e-12)
    throw std::invalid_argument("witness: norm of zero is not zero");
}

// f_j *_T f_j over the current integer multiplicities.
std::vector<int64_t> self_t_convolution(const std::vector<int64_t>& mult,
                                        const OperationTable& t) {
  const int64_t n = t.group().order();
  std::vector<int64_t> out(n, 0);
  for (int64_t a = 0; a < n; ++a) {
    if (!mult[a]) continue;
    for (int64_t b = 0; b < n; ++b) {
      if (!mult[b]) continue;
      out[t.apply(a, b)] += mult[a] * mult[b];
    }
  }
  return out;
}

}  // namespace

WitnessResult build_witness(const IndicatorSet& a, const CandidateFamily& family,
                            const NormFn& norm, const OperationTable& t,
                            double delta1, double delta2) {
  const Group& g = a.group();
  const int64_t n = g.order();
  if (g.order() != t.group().order())
    throw std::invalid_argument("build_witness: table size mismatch");
  if (!(delta2 > 0)) throw std::invalid_argument("build_witness: delta2 must be > 0");
  if (!(delta1 >= 0)) throw std::invalid_argument("build_witness: delta1 must be >= 0");
  if (double(a.count()) < delta2 * double(n) || a.count() == 0)
    throw std::invalid_argument("build_witness: need |A| = theta N >= delta2 N > 0");
  spot_check_norm(norm, a);

  WitnessResult result{g, std::vector<int64_t>(n, 0), 1, {}, kappa(t).k, {}};
  result.admitted = admitted_indices(a, family, norm, delta1);
  for (int64_t i = 0; i < n; ++i) result.multiplicity[i] = a.contains(i) ? 1 : 0;
  if (result.admitted.empty()) return result;  // vacuous quantifier

  Bitset support = a.bits();
  const double slack = 2.0 * double(result.kappa) * delta2 * double(n);
  const int64_t j_limit = int64_t(std::ceil(1.0 / delta2));

  // Pairwise indicator convolutions; cached for small admitted families,
  // recomputed per scan in exhaustive-sized ones.
  const bool cache_pairs = result.admitted.size() <= 64;
  std::map<std::pair<int64_t, int64_t>, std::vector<int64_t>> pair_cache;
  std::vector<int64_t> scratch;
  const auto pair_conv = [&](int64_t i, int64_t j) -> const std::vector<int64_t>& {
    if (cache_pairs) {
      auto key = std::make_pair(i, j);
      auto it = pair_cache.find(key);
      if (it == pair_cache.end())
        it = pair_cache
                 .emplace(key, t_convolve_indicator(family.sets[i], family.sets[j], t))
                 .first;
      return it->second;
    }
    scratch = t_convolve_indicator(family.sets[i], family.sets[j], t);
    return scratch;
  };

  while (true) {
    const std::vector<int64_t> fconv = self_t_convolution(result.multiplicity, t);
    int64_t viol_b = -1, viol_c = -1, viol_x = -1;
    for (int64_t bi : result.admitted) {
      for (int64_t ci : result.admitted) {
        const auto& conv = pair_conv(bi, ci);
        for (int64_t x = 0; x < n; ++x) {
          if (double(conv[x]) > double(fconv[x]) + slack) {
            viol_b = bi;
            viol_c = ci;
            viol_x = x;
            break;
          }
        }
        if (viol_x >= 0) break;
      }
      if (viol_x >= 0) break;
    }
    if (viol_x < 0) break;  // step 2 clean: stop

    const int64_t grow_b = family.sets[viol_b].bits().andnot_count(support);
    const int64_t grow_c = family.sets[viol_c].bits().andnot_count(support);
    const bool take_b = grow_b >= grow_c;
    const int64_t chosen = take_b ? viol_b : viol_c;
    const IndicatorSet& add = family.sets[chosen];
    for (int64_t i = 0; i < n; ++i)
      if (add.contains(i)) ++result.multiplicity[i];
    support |= add.bits();
    ++result.j_count;
    result.trace.push_back(WitnessIteration{result.j_count - 1, viol_b, viol_c, chosen,
                                            take_b ? 'B' : 'C', viol_x, support.count(),
                                            take_b ? grow_b : grow_c});
    if (result.j_count > j_limit)
      throw std::logic_error("build_witness: exceeded ceil(1/delta2) iterations (bug)");
  }
  return result;
}

bool verify_witness(const WitnessResult& result, const IndicatorSet& a,
                    const CandidateFamily& family, const NormFn& norm,
                    const OperationTable& t, double delta1, double delta2) {
  const int64_t n = a.order();
  const int64_t j = result.j_count;
  if (j < 1 || j > int64_t(std::ceil(1.0 / delta2))) return false;

  // multiplicity sanity: in [0, J], >= 1 exactly on the support.
  for (int64_t i = 0; i < n; ++i)
    if (result.multiplicity[i] < 0 || result.multiplicity[i] > j) return false;

  // norm(f - 1_A) <= delta1 (float slack for the averaged difference)
  GroupFunction diff(a.group());
  for (int64_t i = 0; i < n; ++i)
    diff[i] = cplx(double(result.multiplicity[i]) / double(j) -
                       (a.contains(i) ? 1.0 : 0.0),
                   0.0);
  if (norm(diff) > delta1 * (1.0 + 1e-9) + 1e-12) return false;

  const auto admitted = admitted_indices(a, family, norm, delta1);
  const std::vector<int64_t> fconv = [&] {
    std::vector<int64_t> out(n, 0);
    for (int64_t p = 0; p < n; ++p) {
      if (!result.multiplicity[p]) continue;
      for (int64_t q = 0; q < n; ++q) {
        if (!result.multiplicity[q]) continue;
        out[t.apply(p, q)] += result.multiplicity[p] * result.multiplicity[q];
      }
    }
    return out;
  }();

  const int64_t kap = kappa(t).k;
  const double inv = 1.0 / (delta2 * delta2 * double(j) * double(j));
  const double slack = 2.0 * double(kap) * delta2 * double(n);
  for (int64_t bi : admitted) {
    for (int64_t ci : admitted) {
      const auto conv = t_convolve_indicator(family.sets[bi], family.sets[ci], t);
      for (int64_t x = 0; x < n; ++x) {
        const double rhs = inv * double(fconv[x]) + slack;
        if (double(conv[x]) > rhs * (1.0 + 1e-9) + 1e-9) return false;
      }
    }
  }
  return true;
}

IndicatorSet levelset_intersection(const IndicatorSet& a, const CandidateFamily& family,
                                   double gamma, double delta) {
  const Group& g = a.group();
  const int64_t n = g.order();
  const double theta = a.density();
  const double threshold = gamma * theta * theta * double(n);
  IndicatorSet result = IndicatorSet::full(g);
  for (const IndicatorSet& b : family.sets) {
    if (!(b.group() == g))
      throw std::invalid_argument("levelset_intersection: group mismatch");
    if (uniformity(indicator_difference(b, a)) > delta) continue;
    const auto conv = convolve_indicator(b, b);
    for (int64_t x = 0; x < n; ++x)
      if (double(conv[x]) > threshold) result.erase(x);
  }
  return result;
}

double levelset_intersection_bound(const IndicatorSet& a, double gamma, double delta) {
  const int64_t n = a.order();
  const double theta = a.density();
  const auto conv = convolve_indicator(a, a);
  const double inner =
      std::pow(gamma, 3.0) * std::pow(theta, 6.0) * double(n) / 128.0;
  int64_t count = 0;
  for (int64_t x = 0; x < n; ++x)
    if (double(conv[x]) <= inner) ++count;
  const double penalty = std::pow(2.0, 14.0) * std::pow(gamma, -6.0) *
                         std::pow(theta, -12.0) * delta * delta *
                         (4.0 * theta + delta) * double(n);
  return double(count) - penalty;
}

}  // namespace lsl
