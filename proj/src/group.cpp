#include "levelset_lab/group.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lsl {

Group::Group(std::vector<int64_t> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  if (orders_.empty()) throw std::invalid_argument("Group: no cyclic factors");
  for (int64_t n : orders_)
    if (n < 1) throw std::invalid_argument("Group: cyclic order must be >= 1");
  strides_.assign(orders_.size(), 1);
  for (int j = int(orders_.size()) - 2; j >= 0; --j)
    strides_[j] = strides_[j + 1] * orders_[j + 1];
  order_ = strides_[0] * orders_[0];
}

Group Group::parse(std::string_view literal) {
  std::vector<int64_t> orders;
  size_t i = 0;
  while (i < literal.size()) {
    if (std::tolower(literal[i]) != 'z')
      throw std::invalid_argument("Group::parse: expected 'Z' in \"" +
                                  std::string(literal) + "\"");
    ++i;
    size_t start = i;
    while (i < literal.size() && std::isdigit(literal[i])) ++i;
    if (i == start)
      throw std::invalid_argument("Group::parse: missing order in \"" +
                                  std::string(literal) + "\"");
    orders.push_back(std::stoll(std::string(literal.substr(start, i - start))));
    if (i < literal.size()) {
      if (std::tolower(literal[i]) != 'x')
        throw std::invalid_argument("Group::parse: expected 'x' separator in \"" +
                                    std::string(literal) + "\"");
      ++i;
      if (i == literal.size())
        throw std::invalid_argument("Group::parse: trailing separator");
    }
  }
  if (orders.empty()) throw std::invalid_argument("Group::parse: empty literal");
  return Group(std::move(orders));
}

std::vector<int64_t> Group::coords_of(int64_t index) const {
  std::vector<int64_t> c(orders_.size());
  for (size_t j = 0; j < orders_.size(); ++j) {
    c[j] = index / strides_[j];
    index %= strides_[j];
  }
  return c;
}

int64_t Group::index_of(std::span<const int64_t> coords) const {
  if (coords.size() != orders_.size())
    throw std::invalid_argument("Group::index_of: coordinate count mismatch");
  int64_t idx = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    int64_t c = coords[j] % orders_[j];
    if (c < 0) c += orders_[j];
    idx += c * strides_[j];
  }
  return idx;
}

int64_t Group::add(int64_t a, int64_t b) const {
  if (orders_.size() == 1) {
    const int64_t s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  int64_t idx = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    const int64_t ca = a / strides_[j], cb = b / strides_[j];
    a %= strides_[j];
    b %= strides_[j];
    int64_t c = ca + cb;
    if (c >= orders_[j]) c -= orders_[j];
    idx += c * strides_[j];
  }
  return idx;
}

int64_t Group::neg(int64_t a) const {
  if (orders_.size() == 1) return a == 0 ? 0 : order_ - a;
  int64_t idx = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    const int64_t ca = a / strides_[j];
    a %= strides_[j];
    idx += (ca == 0 ? 0 : orders_[j] - ca) * strides_[j];
  }
  return idx;
}

std::vector<int64_t> Group::elements() const {
  std::vector<int64_t> v(order_);
  for (int64_t i = 0; i < order_; ++i) v[i] = i;
  return v;
}

cplx Group::char_eval(int64_t char_index, int64_t elem_index) const {
  // Accumulate sum_j (a_j x_j mod n_j) / n_j; zero phase returns exactly 1.
  double frac = 0;
  bool trivial = true;
  for (size_t j = 0; j < orders_.size(); ++j) {
    const int64_t a = char_index / strides_[j];
    const int64_t x = elem_index / strides_[j];
    char_index %= strides_[j];
    elem_index %= strides_[j];
    const int64_t t = (a * x) % orders_[j];
    if (t != 0) {
      trivial = false;
      frac += double(t) / double(orders_[j]);
    }
  }
  if (trivial) return cplx(1.0, 0.0);
  return std::polar(1.0, 2.0 * std::numbers::pi * frac);
}

cplx Group::char_eval(std::span<const int64_t> freq,
                      std::span<const int64_t> coords) const {
  if (freq.size() != orders_.size() || coords.size() != orders_.size())
    throw std::invalid_argument("char_eval: dimension mismatch");
  return char_eval(index_of(freq), index_of(coords));
}

double Group::char_distance(int64_t char_index, int64_t elem_index) const {
  // |1 - e^{2 pi i s}| = 2 |sin(pi s)|
  double frac = 0;
  for (size_t j = 0; j < orders_.size(); ++j) {
    const int64_t a = char_index / strides_[j];
    const int64_t x = elem_index / strides_[j];
    char_index %= strides_[j];
    elem_index %= strides_[j];
    frac += double((a * x) % orders_[j]) / double(orders_[j]);
  }
  return 2.0 * std::abs(std::sin(std::numbers::pi * frac));
}

std::string Group::to_string() const {
  std::string s;
  for (size_t j = 0; j < orders_.size(); ++j) {
    if (j) s += 'x';
    s += 'Z';
    s += std::to_string(orders_[j]);
  }
  return s;
}

}  // namespace lsl
