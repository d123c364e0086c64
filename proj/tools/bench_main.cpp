#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cycsec/bench.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::istringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SEC separation benchmark over cycle-problem support graphs"};

  std::vector<std::string> instance_paths;
  std::string synthetic_spec;
  std::string strategies_arg = "NO";
  std::string algos_arg = "EH";
  std::string out_path;
  cycsec::BenchConfig cfg;

  app.add_option("--instances", instance_paths, "CYCSEC instance files");
  app.add_option("--synthetic", synthetic_spec,
                 "synthetic instance as n,clusters,cycles");
  app.add_option("--strategies", strategies_arg,
                 "comma list from NO,C1,C1C2,C1C2C3,S1,S1S2");
  app.add_option("--algos", algos_arg, "comma list from EH,DH,DHI,EPG");
  app.add_option("--reps", cfg.reps, "repetitions per combination");
  app.add_option("--seed", cfg.base_seed, "base seed");
  app.add_option("--kin", cfg.k_in, "inside sample size for cut generation");
  app.add_option("--kout", cfg.k_out, "outside sample size for cut generation");
  app.add_flag("--depot-aware", cfg.depot_aware,
               "use the depot shortcut in cut generation");
  app.add_flag("--skip-if-preprocess", cfg.skip_if_preprocess,
               "skip exact separation when the preprocess found Q sets");
  app.add_flag("--pair-scan", cfg.pair_scan, "enable the EPG arc-pair scan");
  app.add_flag("--verify", cfg.verify,
               "cross-check every run against the pairwise oracle");
  app.add_flag("--stable-timing", cfg.stable_timing,
               "zero timing columns for reproducible output");
  app.add_option("--size-class", cfg.size_class, "size class column value");
  app.add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  app.add_option("--out", out_path, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  cfg.instance_paths = instance_paths;
  if (!synthetic_spec.empty()) {
    auto parts = split(synthetic_spec, ',');
    if (parts.size() != 3) {
      std::cerr << "--synthetic expects n,clusters,cycles\n";
      return 1;
    }
    cycsec::SyntheticSpec spec;
    spec.n = std::stoi(parts[0]);
    spec.clusters = std::stoi(parts[1]);
    spec.cycles = std::stoi(parts[2]);
    cfg.synthetic = spec;
  }

  for (const std::string& name : split(strategies_arg, ',')) {
    auto s = cycsec::strategy_from_name(name);
    if (!s) {
      std::cerr << "unknown strategy: " << name << "\n";
      return 1;
    }
    cfg.strategies.push_back(*s);
  }
  for (const std::string& name : split(algos_arg, ',')) {
    auto a = cycsec::algo_from_name(name);
    if (!a) {
      std::cerr << "unknown algorithm: " << name << "\n";
      return 1;
    }
    cfg.algos.push_back(*a);
  }

  cycsec::BenchResult result;
  try {
    result = cycsec::run_bench(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << result.csv;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    f << result.csv;
  }
  if (result.verify_failed) {
    std::cerr << "verification mismatches detected\n";
    return 2;
  }
  return 0;
}
