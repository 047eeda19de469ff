#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "levelset_lab/fourier.hpp"
#include "levelset_lab/function.hpp"

namespace lsl {

/// Set file format: one element per line, mixed-radix coordinates
/// comma-separated; '#' starts a comment.
IndicatorSet read_set_file(const std::string& path, const Group& g);
IndicatorSet parse_set_text(std::istream& in, const Group& g);
void write_set_file(const std::string& path, const IndicatorSet& s);

/// CSV with columns char_index, freq_coords, re, im, magnitude, rank.
/// Multi-coordinate frequencies are joined with ':'.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

/// CSV with columns x_index, coords, value.
void write_convolution_csv(std::ostream& out, const Group& g,
                           const std::vector<double>& values);
void write_convolution_csv(std::ostream& out, const Group& g,
                           const std::vector<int64_t>& values);

/// Shortest round-trip decimal form (deterministic across runs).
std::string format_double(double v);

std::string coords_string(const Group& g, int64_t index, char sep = ':');

/// FNV-1a 64-bit digest, hex-encoded; used for output manifests.
std::string fnv1a64_hex(const std::string& bytes);

/// Comma-separated integer list ("3,5,7"); empty string -> empty vector.
std::vector<int64_t> parse_int_list(const std::string& text);

}  // namespace lsl
