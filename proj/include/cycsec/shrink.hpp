#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cycsec/qrepo.hpp"
#include "cycsec/rng.hpp"
#include "cycsec/support_graph.hpp"

namespace cycsec {

enum class ShrinkRule { C1, C2, C3, S1, S2 };

enum class Strategy { NO, C1, C1C2, C1C2C3, S1, S1S2 };

const char* strategy_name(Strategy s);
std::optional<Strategy> strategy_from_name(const std::string& name);
/// Rules tried per heap pop, in order.
const std::vector<ShrinkRule>& strategy_rules(Strategy s);

struct RuleMatch {
  std::vector<Vertex> s;
  Vertex witness = 0;  // the t vertex of rules C1/C2/C3, 0 otherwise
};

/// First matching shrinkable set at u under the given rule, scanning u's
/// neighborhood in adjacency order.
std::optional<RuleMatch> rule_applicable(const SupportGraph& g, ShrinkRule rule,
                                         Vertex u);

/// Contracts S, then scans the merged vertex's neighborhood for violated
/// logical constraints and saves the corresponding Q sets; pushes the merged
/// vertex and its neighbors onto the heap. Returns the merged vertex.
Vertex shrink_update(SupportGraph& g, const std::vector<Vertex>& s,
                     QRepository& repo);

struct ShrinkReport {
  int final_vertices = 0;
  int final_edges = 0;
  RuleCounts counts;
  long q_found = 0;
  double elapsed_ms = 0.0;
};

/// Exhausts the heap with the strategy's rules. When refill is set, the heap
/// is first loaded with every live vertex in rng order.
ShrinkReport run_strategy(SupportGraph& g, Strategy strat, QRepository& repo,
                          Rng& rng, bool refill = true);

}  // namespace cycsec
