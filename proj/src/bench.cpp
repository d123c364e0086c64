#include "cycsec/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cycsec/cutgen.hpp"
#include "cycsec/instance_io.hpp"
#include "cycsec/oracle.hpp"

namespace cycsec {

namespace {

struct RunRecord {
  std::size_t instance = 0;
  Strategy strategy = Strategy::NO;
  Algo algo = Algo::EH;
  int rep = 0;
  std::uint64_t seed = 0;
  int supp_v = 0, supp_e = 0;
  SeparationStats stats;
  long cuts_1x1 = 0, cuts_kxk = 0;
  double cutgen_ms = 0.0;
  bool verify_mismatch = false;
};

std::string fmt_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", ms);
  return buf;
}

std::string fmt_speedup(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string basename_of(const std::string& path) {
  auto pos = path.find_last_of("/\\");
  return pos == std::string::npos ? path : path.substr(pos + 1);
}

/// Best recoverable violation: each stored Q evaluated on the original
/// point with argmax-y endpoints.
double repo_best_violation(const QRepository& repo, const FractionalPoint& p) {
  double best = 0.0;
  for (const auto& entry : repo.entries()) {
    const std::set<Vertex> q(entry.q.begin(), entry.q.end());
    Vertex u = entry.q.front();
    for (Vertex v : entry.q)
      if (p.y_of(v) > p.y_of(u)) u = v;
    Vertex w = 0;
    for (Vertex v : repo.universe())
      if (!q.count(v) && (w == 0 || p.y_of(v) > p.y_of(w))) w = v;
    if (w == 0) continue;
    best = std::max(best, -sec_slack(p, q, u, w));
  }
  return best;
}

}  // namespace

BenchResult run_bench(const BenchConfig& cfg) {
  if (cfg.reps < 1) throw std::invalid_argument("reps must be >= 1");
  if (cfg.strategies.empty() || cfg.algos.empty())
    throw std::invalid_argument("need at least one strategy and algorithm");

  std::vector<std::pair<std::string, FractionalPoint>> instances;
  for (const std::string& path : cfg.instance_paths) {
    try {
      instances.emplace_back(basename_of(path), load_instance_file(path));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ": " + e.what());
    }
  }
  if (cfg.synthetic) {
    SyntheticParams params;
    params.n = cfg.synthetic->n;
    params.clusters = cfg.synthetic->clusters;
    params.cycles_per_cluster = cfg.synthetic->cycles;
    params.seed = cfg.base_seed;
    std::ostringstream name;
    name << "synthetic-" << params.n << "-" << params.clusters << "-"
         << params.cycles_per_cluster;
    instances.emplace_back(name.str(), generate_synthetic(params));
  }
  if (instances.empty()) throw std::invalid_argument("no instances configured");

  const std::size_t runs_per_instance =
      cfg.strategies.size() * cfg.algos.size() * static_cast<std::size_t>(cfg.reps);
  std::vector<std::vector<RunRecord>> per_instance(instances.size());

  auto process_instance = [&](std::size_t idx) {
    const FractionalPoint& p = instances[idx].second;
    std::vector<RunRecord>& out = per_instance[idx];
    out.reserve(runs_per_instance);

    OracleResult truth;
    if (cfg.verify) truth = oracle_pairwise(p);

    for (std::size_t si = 0; si < cfg.strategies.size(); ++si) {
      for (std::size_t ai = 0; ai < cfg.algos.size(); ++ai) {
        for (int rep = 0; rep < cfg.reps; ++rep) {
          RunRecord rec;
          rec.instance = idx;
          rec.strategy = cfg.strategies[si];
          rec.algo = cfg.algos[ai];
          rec.rep = rep;
          rec.seed = cfg.base_seed + static_cast<std::uint64_t>(rep);
          rec.supp_v = static_cast<int>(p.y.size());
          rec.supp_e = static_cast<int>(p.x.size());

          Rng rng(mix_seed(mix_seed(rec.seed, idx),
                           (si << 8) | ai));
          SeparationResult sep =
              separate(p, rec.algo, rec.strategy, rng, cfg.pair_scan,
                       cfg.skip_if_preprocess);
          rec.stats = sep.stats;

          const auto t0 = std::chrono::steady_clock::now();
          CutGenPolicy one{1, 1, cfg.depot_aware};
          rec.cuts_1x1 =
              static_cast<long>(generate_cuts(sep.repo, p, p.depot, one, rng).size());
          CutGenPolicy kk{cfg.k_in, cfg.k_out, cfg.depot_aware};
          rec.cuts_kxk =
              static_cast<long>(generate_cuts(sep.repo, p, p.depot, kk, rng).size());
          rec.cutgen_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();

          if (cfg.verify) {
            const bool oracle_hit = truth.max_violation > kViolationTol;
            if (sep.repo.empty() == oracle_hit) rec.verify_mismatch = true;
            const bool skipped =
                cfg.skip_if_preprocess && rec.stats.preprocess_q > 0;
            if (!skipped && oracle_hit &&
                std::abs(repo_best_violation(sep.repo, p) -
                         truth.max_violation) > 1e-9)
              rec.verify_mismatch = true;
          }
          out.push_back(std::move(rec));
        }
      }
    }
  };

  unsigned n_threads = cfg.threads > 0
                           ? static_cast<unsigned>(cfg.threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads,
                                 static_cast<unsigned>(instances.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n_threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = next.fetch_add(1); i < instances.size();
             i = next.fetch_add(1))
          process_instance(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  BenchResult result;
  std::ostringstream csv;
  csv << "instance,size_class,strategy,algorithm,rep,seed,supp_V,supp_E,"
         "shrunk_V,shrunk_E,preprocess_Q,preprocess_ms,sep_Q,sep_ms,"
         "cuts_1x1,cuts_kxk,cutgen_ms,c1,c2,c3,s1,s2,dhi_extra\n";

  struct AggKey {
    Strategy s;
    Algo a;
    bool operator<(const AggKey& o) const {
      return s != o.s ? s < o.s : a < o.a;
    }
  };
  struct Agg {
    double prep_ms = 0, sep_ms = 0, sep_q = 0, shrunk_v = 0;
    long n = 0;
  };
  std::map<AggKey, Agg> aggs;
  std::map<std::pair<std::size_t, Strategy>, std::set<std::pair<int, int>>>
      final_sizes;

  for (std::size_t idx = 0; idx < instances.size(); ++idx) {
    for (const RunRecord& r : per_instance[idx]) {
      const double prep_ms = cfg.stable_timing ? 0.0 : r.stats.preprocess_ms;
      const double sep_ms = cfg.stable_timing ? 0.0 : r.stats.separation_ms;
      const double cut_ms = cfg.stable_timing ? 0.0 : r.cutgen_ms;
      csv << instances[idx].first << ',' << cfg.size_class << ','
          << strategy_name(r.strategy) << ',' << algo_name(r.algo) << ','
          << r.rep << ',' << r.seed << ',' << r.supp_v << ',' << r.supp_e
          << ',' << r.stats.shrunk_vertices << ',' << r.stats.shrunk_edges
          << ',' << r.stats.preprocess_q << ',' << fmt_ms(prep_ms) << ','
          << r.stats.separation_q << ',' << fmt_ms(sep_ms) << ','
          << r.cuts_1x1 << ',' << r.cuts_kxk << ',' << fmt_ms(cut_ms) << ','
          << r.stats.rule_counts.c1 << ',' << r.stats.rule_counts.c2 << ','
          << r.stats.rule_counts.c3 << ',' << r.stats.rule_counts.s1 << ','
          << r.stats.rule_counts.s2 << ',' << r.stats.dhi_extra << '\n';

      Agg& a = aggs[{r.strategy, r.algo}];
      a.prep_ms += prep_ms;
      a.sep_ms += sep_ms;
      a.sep_q += static_cast<double>(r.stats.separation_q);
      a.shrunk_v += r.stats.shrunk_vertices;
      ++a.n;
      final_sizes[{idx, r.strategy}].insert(
          {r.stats.shrunk_vertices, r.stats.shrunk_edges});
      if (r.verify_mismatch) result.verify_failed = true;
    }
  }

  csv << "\n# aggregate means; speedup vs (EH,NO) preprocess+separation time\n";
  csv << "strategy,algorithm,mean_shrunk_V,mean_preprocess_ms,mean_sep_Q,"
         "mean_sep_ms,speedup\n";
  double baseline = 0.0;
  auto base_it = aggs.find({Strategy::NO, Algo::EH});
  if (base_it != aggs.end() && base_it->second.n > 0)
    baseline = (base_it->second.prep_ms + base_it->second.sep_ms) /
               static_cast<double>(base_it->second.n);
  for (const auto& [key, a] : aggs) {
    const double n = static_cast<double>(a.n);
    const double total = (a.prep_ms + a.sep_ms) / n;
    const double speedup = baseline > 0.0 && total > 0.0 ? baseline / total : 1.0;
    csv << strategy_name(key.s) << ',' << algo_name(key.a) << ','
        << fmt_ms(a.shrunk_v / n) << ',' << fmt_ms(a.prep_ms / n) << ','
        << fmt_ms(a.sep_q / n) << ',' << fmt_ms(a.sep_ms / n) << ','
        << fmt_speedup(speedup) << '\n';
  }

  for (const auto& [key, sizes] : final_sizes) {
    if (key.second == Strategy::NO) continue;
    csv << "# conjecture-2 " << instances[key.first].first << " "
        << strategy_name(key.second) << ": ";
    if (sizes.size() == 1) {
      csv << "final size stable (" << sizes.begin()->first << ","
          << sizes.begin()->second << ")\n";
    } else {
      csv << "final sizes differ across runs:";
      for (const auto& [v, e] : sizes) csv << " (" << v << "," << e << ")";
      csv << "\n";
    }
  }

  if (cfg.verify) {
    for (std::size_t idx = 0; idx < instances.size(); ++idx)
      for (const RunRecord& r : per_instance[idx])
        if (r.verify_mismatch)
          csv << "# verify mismatch: " << instances[idx].first << " "
              << strategy_name(r.strategy) << " " << algo_name(r.algo)
              << " rep " << r.rep << "\n";
  }

  result.csv = csv.str();
  return result;
}

}  // namespace cycsec
