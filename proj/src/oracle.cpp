#include "cycsec/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "cycsec/maxflow.hpp"
#include "cycsec/qrepo.hpp"

namespace cycsec {

namespace {

struct Collector {
  std::vector<Vertex> universe;
  double best_slack = 0.0;
  std::optional<SEC> witness;
  std::vector<std::vector<Vertex>> violated;
  std::set<std::vector<Vertex>> seen;

  void offer(const std::set<Vertex>& q, Vertex u, Vertex v, double slack) {
    if (slack >= -kViolationTol) return;
    std::vector<Vertex> canon = canonical_q(universe, q);
    if (seen.insert(canon).second) violated.push_back(canon);
    if (slack < best_slack) {
      best_slack = slack;
      witness = SEC{{q.begin(), q.end()}, u, v, slack};
    }
  }

  OracleResult finish() {
    OracleResult r;
    r.max_violation = best_slack < 0.0 ? -best_slack : 0.0;
    r.witness = std::move(witness);
    r.all_violated_q = std::move(violated);
    return r;
  }
};

/// Argmax by weight, smallest id on ties.
template <typename Weight>
Vertex argmax(const std::vector<Vertex>& vs, Weight weight) {
  Vertex best = vs.front();
  for (Vertex v : vs)
    if (weight(v) > weight(best)) best = v;
  return best;
}

OracleResult enumerate_subsets(const std::vector<Vertex>& supp,
                               const std::function<double(Vertex)>& weight,
                               const std::function<double(const std::set<Vertex>&)>& cut) {
  const int n = static_cast<int>(supp.size());
  if (n > 16) throw std::length_error("enumeration oracle limited to 16 vertices");

  Collector col;
  col.universe = supp;
  if (n >= 4) {
    // Q and its complement score identically, so pin supp[0] inside Q.
    for (unsigned mask = 1; mask < (1u << n); mask += 2) {
      const int bits = __builtin_popcount(mask);
      if (bits < 2 || bits > n - 2) continue;
      std::set<Vertex> q;
      std::vector<Vertex> in, out;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i)) {
          q.insert(supp[i]);
          in.push_back(supp[i]);
        } else {
          out.push_back(supp[i]);
        }
      }
      const Vertex u = argmax(in, weight);
      const Vertex v = argmax(out, weight);
      const double slack = cut(q) - 2.0 * weight(u) - 2.0 * weight(v) + 2.0;
      col.offer(q, u, v, slack);
    }
  }
  return col.finish();
}

}  // namespace

OracleResult oracle_pairwise(const FractionalPoint& p) {
  const SupportGraph g = SupportGraph::from_point(p);
  const std::vector<Vertex> supp = g.live_vertices();

  Collector col;
  col.universe = supp;
  MinCutSolver solver;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    for (std::size_t j = i + 1; j < supp.size(); ++j) {
      const Vertex u = supp[i];
      const Vertex v = supp[j];
      CutResult cut = solver.st_min_cut(g, u, v);
      const double slack =
          cut.value - 2.0 * p.y_of(u) - 2.0 * p.y_of(v) + 2.0;
      col.offer(cut.source_side, u, v, slack);
    }
  }
  return col.finish();
}

OracleResult oracle_enumerate(const FractionalPoint& p) {
  const std::vector<Vertex> supp = p.support();
  return enumerate_subsets(
      supp, [&](Vertex v) { return p.y_of(v); },
      [&](const std::set<Vertex>& q) { return cut_value(p, q); });
}

OracleResult oracle_enumerate_m(const SupportGraph& g) {
  const std::vector<Vertex> live = g.live_vertices();
  return enumerate_subsets(
      live, [&](Vertex v) { return g.m(v); },
      [&](const std::set<Vertex>& q) { return g.cut_value(q); });
}

}  // namespace cycsec
