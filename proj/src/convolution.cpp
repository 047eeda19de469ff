#include "levelset_lab/convolution.hpp"

#include <stdexcept>

#include "levelset_lab/fourier.hpp"

namespace lsl {

namespace {

void require_same_group(const Group& a, const Group& b, const char* who) {
  if (!(a == b)) throw std::invalid_argument(std::string(who) + ": group mismatch");
}

}  // namespace

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f.group(), g.group(), "convolve");
  Spectrum sf = fourier_transform(f);
  const Spectrum sg = fourier_transform(g);
  for (size_t i = 0; i < sf.coeffs.size(); ++i) sf.coeffs[i] *= sg.coeffs[i];
  return inverse_fourier(sf);
}

GroupFunction convolve_direct(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f.group(), g.group(), "convolve_direct");
  const Group& grp = f.group();
  const int64_t n = grp.order();
  GroupFunction out(grp);
  if (grp.rank() == 1) {
    for (int64_t a = 0; a < n; ++a) {
      if (f[a] == cplx(0, 0)) continue;
      int64_t x = a;
      for (int64_t b = 0; b < n; ++b) {
        out[x] += f[a] * g[b];
        if (++x == n) x = 0;
      }
    }
  } else {
    for (int64_t a = 0; a < n; ++a) {
      if (f[a] == cplx(0, 0)) continue;
      for (int64_t b = 0; b < n; ++b) out[grp.add(a, b)] += f[a] * g[b];
    }
  }
  return out;
}

std::vector<int64_t> convolve_indicator(const IndicatorSet& a, const IndicatorSet& b) {
  require_same_group(a.group(), b.group(), "convolve_indicator");
  const Group& grp = a.group();
  std::vector<int64_t> out(grp.order(), 0);
  const auto ea = a.elements();
  const auto eb = b.elements();
  if (grp.rank() == 1) {
    const int64_t n = grp.order();
    for (int64_t x : ea)
      for (int64_t y : eb) {
        int64_t s = x + y;
        if (s >= n) s -= n;
        ++out[s];
      }
  } else {
    for (int64_t x : ea)
      for (int64_t y : eb) ++out[grp.add(x, y)];
  }
  return out;
}

int64_t convolve_indicator_at(const IndicatorSet& a, const IndicatorSet& b, int64_t x) {
  require_same_group(a.group(), b.group(), "convolve_indicator_at");
  // #{(s,t) : s + t = x} = |A  intersect  (x - B)|
  return a.bits().and_count(b.negated().translated(x).bits());
}

OperationTable::OperationTable(Group g, std::vector<int32_t> table)
    : group_(std::move(g)), table_(std::move(table)) {
  const int64_t n = group_.order();
  if (n > 2048)
    throw std::invalid_argument("OperationTable: carrier too large (max 2048)");
  if (int64_t(table_.size()) != n * n)
    throw std::invalid_argument("OperationTable: table size must be N*N");
  for (int32_t v : table_)
    if (v < 0 || v >= n) throw std::invalid_argument("OperationTable: entry out of range");
}

OperationTable OperationTable::from_function(
    Group g, const std::function<int64_t(int64_t, int64_t)>& t) {
  const int64_t n = g.order();
  if (n > 2048)
    throw std::invalid_argument("OperationTable: carrier too large (max 2048)");
  std::vector<int32_t> table(n * n);
  for (int64_t a = 0; a < n; ++a)
    for (int64_t b = 0; b < n; ++b) {
      const int64_t v = t(a, b);
      if (v < 0 || v >= n)
        throw std::invalid_argument("OperationTable: value out of range");
      table[a * n + b] = int32_t(v);
    }
  return OperationTable(std::move(g), std::move(table));
}

OperationTable OperationTable::addition(const Group& g) {
  return from_function(g, [&g](int64_t a, int64_t b) { return g.add(a, b); });
}

OperationTable OperationTable::left_projection(const Group& g) {
  return from_function(g, [](int64_t a, int64_t) { return a; });
}

OperationTable OperationTable::constant(const Group& g, int64_t x0) {
  if (x0 < 0 || x0 >= g.order())
    throw std::invalid_argument("OperationTable::constant: x0 out of range");
  return from_function(g, [x0](int64_t, int64_t) { return x0; });
}

GroupFunction t_convolve(const GroupFunction& f, const GroupFunction& g,
                         const OperationTable& t) {
  if (f.order() != t.group().order() || g.order() != t.group().order())
    throw std::invalid_argument("t_convolve: size mismatch");
  const int64_t n = t.group().order();
  GroupFunction out(t.group());
  for (int64_t a = 0; a < n; ++a) {
    if (f[a] == cplx(0, 0)) continue;
    for (int64_t b = 0; b < n; ++b) out[t.apply(a, b)] += f[a] * g[b];
  }
  return out;
}

std::vector<int64_t> t_convolve_indicator(const IndicatorSet& a, const IndicatorSet& b,
                                          const OperationTable& t) {
  if (a.order() != t.group().order() || b.order() != t.group().order())
    throw std::invalid_argument("t_convolve_indicator: size mismatch");
  std::vector<int64_t> out(t.group().order(), 0);
  for (int64_t x : a.elements())
    for (int64_t y : b.elements()) ++out[t.apply(x, y)];
  return out;
}

Kappa kappa(const OperationTable& t) {
  const int64_t n = t.group().order();
  std::vector<int64_t> cnt(n);
  Kappa k{0, 0, 0};
  for (int64_t a = 0; a < n; ++a) {
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int64_t b = 0; b < n; ++b) ++cnt[t.apply(a, b)];
    for (int64_t x = 0; x < n; ++x) k.k1 = std::max(k.k1, cnt[x]);
    std::fill(cnt.begin(), cnt.end(), 0);
    for (int64_t b = 0; b < n; ++b) ++cnt[t.apply(b, a)];
    for (int64_t x = 0; x < n; ++x) k.k2 = std::max(k.k2, cnt[x]);
  }
  k.k = std::max(k.k1, k.k2);
  return k;
}

IndicatorSet sumset(const IndicatorSet& a, const IndicatorSet& b) {
  require_same_group(a.group(), b.group(), "sumset");
  const Group& grp = a.group();
  IndicatorSet out(grp);
  if (grp.rank() == 1) {
    Bitset acc(grp.order());
    for (int64_t x = a.bits().find_first(); x >= 0; x = a.bits().find_next(x))
      acc |= b.bits().rotated(x);
    return IndicatorSet(grp, std::move(acc));
  }
  for (int64_t x : a.elements())
    for (int64_t y : b.elements()) out.insert(grp.add(x, y));
  return out;
}

LevelSet level_set(const GroupFunction& conv, double threshold, Strictness s) {
  if (!conv.is_real(1e-9))
    throw std::invalid_argument("level_set: convolution must be real-valued");
  IndicatorSet members(conv.group());
  for (int64_t x = 0; x < conv.order(); ++x) {
    const double v = conv[x].real();
    if (s == Strictness::Strict ? v < threshold : v <= threshold) members.insert(x);
  }
  return LevelSet{threshold, s, std::move(members)};
}

LevelSet level_set(const Group& g, const std::vector<int64_t>& conv, double threshold,
                   Strictness s) {
  if (int64_t(conv.size()) != g.order())
    throw std::invalid_argument("level_set: value count != group order");
  IndicatorSet members(g);
  for (int64_t x = 0; x < g.order(); ++x) {
    const double v = double(conv[x]);
    if (s == Strictness::Strict ? v < threshold : v <= threshold) members.insert(x);
  }
  return LevelSet{threshold, s, std::move(members)};
}

ConvolutionProximity convolution_proximity_check(const GroupFunction& g,
                                                 const GroupFunction& h) {
  require_same_group(g.group(), h.group(), "convolution_proximity_check");
  const double n = double(g.order());
  ConvolutionProximity r;
  r.theta = g.sum().real() / n;
  r.delta1 = uniformity(g - h);
  const GroupFunction gg = convolve(g, g);
  const GroupFunction hh = convolve(h, h);
  double lhs = 0;
  for (int64_t x = 0; x < g.order(); ++x) lhs += std::norm(gg[x] - hh[x]);
  r.lhs = lhs;
  r.rhs = r.delta1 * r.delta1 * (4.0 * r.theta + r.delta1) * n * n * n;
  r.holds = r.lhs <= r.rhs * (1.0 + 1e-9) + 1e-9;
  return r;
}

}  // namespace lsl
