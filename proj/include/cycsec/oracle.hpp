#pragma once

#include <optional>
#include <vector>

#include "cycsec/fractional_point.hpp"
#include "cycsec/support_graph.hpp"
#include "cycsec/types.hpp"

namespace cycsec {

/// Ground truth from an independent separator. max_violation is 0 when no
/// SEC is violated; otherwise witness holds a most-violated SEC and
/// all_violated_q the canonical violated cut sides.
struct OracleResult {
  double max_violation = 0.0;
  std::optional<SEC> witness;
  std::vector<std::vector<Vertex>> all_violated_q;
};

/// All-pairs min-cut separator, one solve per support vertex pair.
OracleResult oracle_pairwise(const FractionalPoint& p);

/// Exhaustive subset separator with argmax-y endpoints; |supp| <= 16.
OracleResult oracle_enumerate(const FractionalPoint& p);

/// Exhaustive subset separator on a live (possibly shrunk) graph under the
/// m-inequality with argmax-m endpoints; Q sets carry live ids.
OracleResult oracle_enumerate_m(const SupportGraph& g);

}  // namespace cycsec
