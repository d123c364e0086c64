#pragma once

#include <optional>
#include <string>

#include "cycsec/fractional_point.hpp"
#include "cycsec/gomory_hu.hpp"
#include "cycsec/qrepo.hpp"
#include "cycsec/rng.hpp"
#include "cycsec/shrink.hpp"

namespace cycsec {

enum class Algo { EH, DH, DHI, EPG };

const char* algo_name(Algo a);
std::optional<Algo> algo_from_name(const std::string& name);

struct SeparationStats {
  Algo algo = Algo::EH;
  Strategy strategy = Strategy::NO;
  long mincut_solves = 0;
  long preprocess_q = 0;
  long separation_q = 0;
  double preprocess_ms = 0.0;
  double separation_ms = 0.0;
  long dhi_extra = 0;    // vertices contracted by DHI's internal shrinking
  RuleCounts rule_counts;
  int shrunk_vertices = 0;  // graph size after the preprocess
  int shrunk_edges = 0;
};

struct SeparationResult {
  QRepository repo;
  SeparationStats stats;
};

/// Runs the shrinking strategy as preprocess, then the chosen exact
/// separation algorithm. Every stored Q is canonical in original ids and
/// has m-inequality slack below -1e-6. With skip_if_preprocess set, the
/// separation phase is suppressed when the preprocess already found Q sets.
SeparationResult separate(const FractionalPoint& p, Algo algo, Strategy strat,
                          Rng& rng, bool pair_scan = false,
                          bool skip_if_preprocess = false);

/// Arc-pair extension of EPG: saves the union of two disjoint descendant
/// sides when the paired bound already proves a violation. Returns the
/// number of new Q sets.
long epg_pair_scan(const GHTree& tree, const SupportGraph& g,
                   QRepository& repo);

}  // namespace cycsec
