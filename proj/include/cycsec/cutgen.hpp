#pragma once

#include <vector>

#include "cycsec/fractional_point.hpp"
#include "cycsec/qrepo.hpp"
#include "cycsec/rng.hpp"
#include "cycsec/types.hpp"

namespace cycsec {

struct CutGenPolicy {
  int k_in = 1;
  int k_out = 1;
  bool depot_aware = false;
};

/// Expands stored Q sets into explicit violated SECs. Inside endpoints come
/// from the argmax-y set of Q (k_in samples), outside endpoints from the
/// argmax-y set of the complement (a fresh k_out sample per inside vertex).
/// With depot_aware set and a depot present, the depot side collapses to
/// the depot itself. Duplicate (u,v) pairs per Q are suppressed and only
/// SECs violated beyond tolerance are emitted.
std::vector<SEC> generate_cuts(const QRepository& repo,
                               const FractionalPoint& p, Vertex depot,
                               const CutGenPolicy& policy, Rng& rng);

}  // namespace cycsec
