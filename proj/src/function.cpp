#include "levelset_lab/function.hpp"

#include <stdexcept>

namespace lsl {

IndicatorSet::IndicatorSet(Group g, Bitset bits)
    : group_(std::move(g)), bits_(std::move(bits)) {
  if (bits_.size() != group_.order())
    throw std::invalid_argument("IndicatorSet: bitset size != group order");
}

IndicatorSet IndicatorSet::full(Group g) {
  IndicatorSet s(std::move(g));
  s.bits_ = ~s.bits_;
  return s;
}

IndicatorSet IndicatorSet::of(Group g, const std::vector<int64_t>& element_indices) {
  IndicatorSet s(std::move(g));
  for (int64_t i : element_indices) {
    if (i < 0 || i >= s.order())
      throw std::invalid_argument("IndicatorSet::of: element index out of range");
    s.insert(i);
  }
  return s;
}

std::vector<int64_t> IndicatorSet::elements() const {
  std::vector<int64_t> v;
  v.reserve(count());
  for (int64_t i = bits_.find_first(); i >= 0; i = bits_.find_next(i))
    v.push_back(i);
  return v;
}

IndicatorSet IndicatorSet::translated(int64_t t) const {
  if (group_.rank() == 1) return IndicatorSet(group_, bits_.rotated(t));
  IndicatorSet r(group_);
  for (int64_t i = bits_.find_first(); i >= 0; i = bits_.find_next(i))
    r.insert(group_.add(i, t));
  return r;
}

IndicatorSet IndicatorSet::negated() const {
  if (group_.rank() == 1) return IndicatorSet(group_, bits_.negated_index());
  IndicatorSet r(group_);
  for (int64_t i = bits_.find_first(); i >= 0; i = bits_.find_next(i))
    r.insert(group_.neg(i));
  return r;
}

IndicatorSet IndicatorSet::dilated(int64_t lambda) const {
  IndicatorSet r(group_);
  const auto& orders = group_.cyclic_orders();
  for (int64_t i = bits_.find_first(); i >= 0; i = bits_.find_next(i)) {
    auto c = group_.coords_of(i);
    for (size_t j = 0; j < c.size(); ++j) {
      c[j] = (c[j] * (lambda % orders[j])) % orders[j];
      if (c[j] < 0) c[j] += orders[j];
    }
    r.insert(group_.index_of(c));
  }
  return r;
}

IndicatorSet IndicatorSet::operator|(const IndicatorSet& o) const {
  if (!(group_ == o.group_)) throw std::invalid_argument("IndicatorSet: group mismatch");
  Bitset b = bits_;
  b |= o.bits_;
  return IndicatorSet(group_, std::move(b));
}

IndicatorSet IndicatorSet::operator&(const IndicatorSet& o) const {
  if (!(group_ == o.group_)) throw std::invalid_argument("IndicatorSet: group mismatch");
  Bitset b = bits_;
  b &= o.bits_;
  return IndicatorSet(group_, std::move(b));
}

GroupFunction IndicatorSet::to_function() const {
  GroupFunction f(group_);
  for (int64_t i = bits_.find_first(); i >= 0; i = bits_.find_next(i))
    f[i] = cplx(1.0, 0.0);
  return f;
}

GroupFunction::GroupFunction(Group g, std::vector<cplx> values)
    : group_(std::move(g)), values_(std::move(values)) {
  if (int64_t(values_.size()) != group_.order())
    throw std::invalid_argument("GroupFunction: value count != group order");
}

GroupFunction::GroupFunction(Group g, const std::vector<double>& values)
    : group_(std::move(g)) {
  if (int64_t(values.size()) != group_.order())
    throw std::invalid_argument("GroupFunction: value count != group order");
  values_.reserve(values.size());
  for (double v : values) values_.emplace_back(v, 0.0);
}

cplx GroupFunction::sum() const {
  cplx s(0, 0);
  for (const cplx& v : values_) s += v;
  return s;
}

bool GroupFunction::is_real(double tol) const {
  for (const cplx& v : values_)
    if (std::abs(v.imag()) > tol) return false;
  return true;
}

bool GroupFunction::in_unit_interval(double tol) const {
  for (const cplx& v : values_)
    if (std::abs(v.imag()) > tol || v.real() < -tol || v.real() > 1.0 + tol)
      return false;
  return true;
}

IndicatorSet GroupFunction::to_indicator() const {
  IndicatorSet s(group_);
  for (int64_t i = 0; i < order(); ++i) {
    if (values_[i] == cplx(1.0, 0.0))
      s.insert(i);
    else if (!(values_[i] == cplx(0.0, 0.0)))
      throw std::invalid_argument("to_indicator: function is not {0,1}-valued");
  }
  return s;
}

GroupFunction GroupFunction::operator+(const GroupFunction& o) const {
  if (!(group_ == o.group_)) throw std::invalid_argument("GroupFunction: group mismatch");
  GroupFunction r(group_);
  for (int64_t i = 0; i < order(); ++i) r[i] = values_[i] + o.values_[i];
  return r;
}

GroupFunction GroupFunction::operator-(const GroupFunction& o) const {
  if (!(group_ == o.group_)) throw std::invalid_argument("GroupFunction: group mismatch");
  GroupFunction r(group_);
  for (int64_t i = 0; i < order(); ++i) r[i] = values_[i] - o.values_[i];
  return r;
}

GroupFunction GroupFunction::operator*(double s) const {
  GroupFunction r(group_);
  for (int64_t i = 0; i < order(); ++i) r[i] = values_[i] * s;
  return r;
}

}  // namespace lsl
