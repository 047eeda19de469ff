#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lsl {

using cplx = std::complex<double>;

/// A finite abelian group Z_{n_1} x ... x Z_{n_m}.
///
/// Elements and characters are both addressed by a mixed-radix index in
/// [0, N), N = prod n_j, so functions on the group are dense arrays.  The
/// index order is lexicographic in the coordinates (last coordinate
/// fastest); index 0 is the identity / principal character.  No
/// canonicalization is applied: Z4 and Z2xZ2 are distinct values.
class Group {
 public:
  explicit Group(std::vector<int64_t> cyclic_orders);

  /// Parses literals like "Z7" or "Z3xZ3xZ5" (case-insensitive).
  static Group parse(std::string_view literal);

  int64_t order() const { return order_; }
  int rank() const { return int(orders_.size()); }
  const std::vector<int64_t>& cyclic_orders() const { return orders_; }

  std::vector<int64_t> coords_of(int64_t index) const;
  int64_t index_of(std::span<const int64_t> coords) const;

  int64_t add(int64_t a, int64_t b) const;
  int64_t neg(int64_t a) const;
  int64_t sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

  /// All N element indices in order; the first is the identity.
  std::vector<int64_t> elements() const;

  /// chi_c(x) = exp(2*pi*i * sum_j c_j x_j / n_j); exactly 1 for the
  /// principal character or the identity.
  cplx char_eval(int64_t char_index, int64_t elem_index) const;
  cplx char_eval(std::span<const int64_t> freq,
                 std::span<const int64_t> coords) const;

  /// |1 - chi_c(x)|, the distance Bohr membership is tested against.
  double char_distance(int64_t char_index, int64_t elem_index) const;

  bool operator==(const Group& o) const { return orders_ == o.orders_; }

  std::string to_string() const;

 private:
  std::vector<int64_t> orders_;
  std::vector<int64_t> strides_;  // strides_[j] = prod of orders after j
  int64_t order_ = 1;
};

}  // namespace lsl
