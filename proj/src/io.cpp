#include "levelset_lab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lsl {

IndicatorSet parse_set_text(std::istream& in, const Group& g) {
  IndicatorSet s{g};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::vector<int64_t> coords;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto first = tok.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        if (!coords.empty())
          throw std::invalid_argument("set file line " + std::to_string(lineno) +
                                      ": empty coordinate");
        continue;
      }
      const auto last = tok.find_last_not_of(" \t\r");
      int64_t v = 0;
      const auto body = tok.substr(first, last - first + 1);
      const auto [p, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
      if (ec != std::errc() || p != body.data() + body.size())
        throw std::invalid_argument("set file line " + std::to_string(lineno) +
                                    ": bad coordinate '" + body + "'");
      coords.push_back(v);
    }
    if (coords.empty()) continue;  // blank or comment-only line
    if (int(coords.size()) != g.rank())
      throw std::invalid_argument("set file line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(g.rank()) + " coordinates");
    for (int j = 0; j < g.rank(); ++j)
      if (coords[j] < 0 || coords[j] >= g.cyclic_orders()[j])
        throw std::invalid_argument("set file line " + std::to_string(lineno) +
                                    ": coordinate out of range");
    s.insert(g.index_of(coords));
  }
  return s;
}

IndicatorSet read_set_file(const std::string& path, const Group& g) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open set file: " + path);
  return parse_set_text(in, g);
}

void write_set_file(const std::string& path, const IndicatorSet& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write set file: " + path);
  out << "# " << s.group().to_string() << ", " << s.count() << " elements\n";
  for (int64_t i : s.elements()) out << coords_string(s.group(), i, ',') << "\n";
}

std::string format_double(double v) {
  char buf[40];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string coords_string(const Group& g, int64_t index, char sep) {
  const auto c = g.coords_of(index);
  std::string s;
  for (size_t j = 0; j < c.size(); ++j) {
    if (j) s += sep;
    s += std::to_string(c[j]);
  }
  return s;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  const int64_t n = s.group.order();
  std::vector<int64_t> rank(n);
  for (int64_t r = 0; r < n; ++r) rank[s.order[r]] = r + 1;
  out << "char_index,freq_coords,re,im,magnitude,rank\n";
  for (int64_t i = 0; i < n; ++i) {
    out << i << ',' << coords_string(s.group, i) << ',' << format_double(s.coeffs[i].real())
        << ',' << format_double(s.coeffs[i].imag()) << ','
        << format_double(std::abs(s.coeffs[i])) << ',' << rank[i] << "\n";
  }
}

void write_convolution_csv(std::ostream& out, const Group& g,
                           const std::vector<double>& values) {
  out << "x_index,coords,value\n";
  for (int64_t i = 0; i < int64_t(values.size()); ++i)
    out << i << ',' << coords_string(g, i) << ',' << format_double(values[i]) << "\n";
}

void write_convolution_csv(std::ostream& out, const Group& g,
                           const std::vector<int64_t>& values) {
  out << "x_index,coords,value\n";
  for (int64_t i = 0; i < int64_t(values.size()); ++i)
    out << i << ',' << coords_string(g, i) << ',' << values[i] << "\n";
}

std::string fnv1a64_hex(const std::string& bytes) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    v.push_back(std::stoll(tok, &pos));
    if (pos != tok.size())
      throw std::invalid_argument("bad integer list element: '" + tok + "'");
  }
  return v;
}

}  // namespace lsl
