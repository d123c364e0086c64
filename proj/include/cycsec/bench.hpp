#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycsec/separation.hpp"

namespace cycsec {

struct SyntheticSpec {
  int n = 0;
  int clusters = 1;
  int cycles = 1;
};

struct BenchConfig {
  std::vector<std::string> instance_paths;
  std::optional<SyntheticSpec> synthetic;
  std::vector<Strategy> strategies;
  std::vector<Algo> algos;
  int reps = 10;
  std::uint64_t base_seed = 0;
  int k_in = 1;
  int k_out = 1;
  bool depot_aware = false;
  bool skip_if_preprocess = false;
  bool pair_scan = false;
  bool verify = false;
  bool stable_timing = false;  // zero the timing columns for golden output
  std::string size_class;      // free-form label column
  int threads = 0;             // 0 = hardware concurrency
};

struct BenchResult {
  std::string csv;
  bool verify_failed = false;
};

/// Runs the (instance x strategy x algorithm x rep) grid and renders the
/// CSV report with per-run rows, aggregate means with speedups against the
/// (EH, NO) baseline, and final-size comparison comment lines.
BenchResult run_bench(const BenchConfig& config);

}  // namespace cycsec
