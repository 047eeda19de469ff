#pragma once

#include <cstdint>
#include <vector>

#include "levelset_lab/bitset.hpp"
#include "levelset_lab/group.hpp"

namespace lsl {

class GroupFunction;

/// A subset of a Group, bit-packed.  Doubles as the {0,1}-valued view of
/// a GroupFunction.
class IndicatorSet {
 public:
  explicit IndicatorSet(Group g) : group_(std::move(g)), bits_(group_.order()) {}
  IndicatorSet(Group g, Bitset bits);

  static IndicatorSet full(Group g);
  static IndicatorSet of(Group g, const std::vector<int64_t>& element_indices);

  const Group& group() const { return group_; }
  const Bitset& bits() const { return bits_; }
  int64_t order() const { return group_.order(); }

  bool contains(int64_t i) const { return bits_.test(i); }
  void insert(int64_t i) { bits_.set(i); }
  void erase(int64_t i) { bits_.set(i, false); }
  int64_t count() const { return bits_.count(); }
  double density() const { return double(count()) / double(order()); }

  std::vector<int64_t> elements() const;

  IndicatorSet translated(int64_t t) const;  // A + t
  IndicatorSet negated() const;              // -A
  IndicatorSet dilated(int64_t lambda) const;  // {lambda * a}, coordinatewise
  IndicatorSet complement() const { return IndicatorSet(group_, ~bits_); }

  IndicatorSet operator|(const IndicatorSet& o) const;
  IndicatorSet operator&(const IndicatorSet& o) const;

  GroupFunction to_function() const;

  bool operator==(const IndicatorSet& o) const {
    return group_ == o.group_ && bits_ == o.bits_;
  }

 private:
  Group group_;
  Bitset bits_;
};

/// Dense complex-valued function on a Group.
class GroupFunction {
 public:
  explicit GroupFunction(Group g, cplx fill = cplx(0, 0))
      : group_(std::move(g)), values_(group_.order(), fill) {}
  GroupFunction(Group g, std::vector<cplx> values);
  GroupFunction(Group g, const std::vector<double>& values);

  const Group& group() const { return group_; }
  int64_t order() const { return group_.order(); }

  cplx& operator[](int64_t i) { return values_[i]; }
  const cplx& operator[](int64_t i) const { return values_[i]; }
  const std::vector<cplx>& values() const { return values_; }
  std::vector<cplx>& values() { return values_; }

  cplx sum() const;
  cplx expectation() const { return sum() / double(order()); }

  bool is_real(double tol = 0.0) const;
  bool in_unit_interval(double tol = 0.0) const;

  /// Bit-packed view; valid only when every value is exactly 0 or 1.
  IndicatorSet to_indicator() const;

  GroupFunction operator+(const GroupFunction& o) const;
  GroupFunction operator-(const GroupFunction& o) const;
  GroupFunction operator*(double s) const;

 private:
  Group group_;
  std::vector<cplx> values_;
};

}  // namespace lsl
