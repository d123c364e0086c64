#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cycsec/fractional_point.hpp"

namespace cycsec {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

FractionalPoint parse_instance(const std::string& text);
std::string write_instance(const FractionalPoint& p);

FractionalPoint load_instance_file(const std::string& path);
void save_instance_file(const FractionalPoint& p, const std::string& path);

struct SyntheticParams {
  int n = 0;
  int clusters = 1;
  int cycles_per_cluster = 1;
  double perturbation = 0.0;
  std::uint64_t seed = 0;
};

/// Random geometric fractional point: uniform points in the unit square,
/// split into `clusters` groups by x coordinate, each group carrying a
/// simplex-weighted convex combination of random simple cycles.
FractionalPoint generate_synthetic(const SyntheticParams& params);

}  // namespace cycsec
