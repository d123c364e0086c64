#pragma once

#include <map>
#include <set>
#include <vector>

#include "cycsec/fractional_point.hpp"
#include "cycsec/types.hpp"

namespace cycsec {

/// Per-rule application counters of a shrinking run.
struct RuleCounts {
  long c1 = 0, c2 = 0, c3 = 0, s1 = 0, s2 = 0;
  long total() const { return c1 + c2 + c3 + s1 + s2; }
};

/// The live (possibly contracted) support graph of a fractional point.
///
/// Original support vertices keep their ids; every contraction mints a fresh
/// id above the original range. The partition map pi tracks, for each live
/// vertex, the original support vertices it stands for, and m tracks the
/// maximum original y value inside that class. Contracted-away vertices stay
/// allocated but dead.
class SupportGraph {
 public:
  static SupportGraph from_point(const FractionalPoint& p);

  bool alive(Vertex v) const { return data_.count(v) && data_.at(v).alive; }
  std::vector<Vertex> live_vertices() const;
  int live_vertex_count() const { return live_count_; }
  int live_edge_count() const;

  double y(Vertex v) const { return node(v).y; }
  double m(Vertex v) const { return node(v).m; }
  double x(Vertex u, Vertex v) const;
  /// x(delta(v)) over live neighbors.
  double degree(Vertex v) const;
  const std::map<Vertex, double>& neighbors(Vertex v) const {
    return node(v).adj;
  }

  /// x(delta(Q)) for a set of live vertices.
  double cut_value(const std::set<Vertex>& q_live) const;
  /// m-inequality slack of <Q, u, v> on the live graph:
  /// x(delta(Q)) - 2m(u) - 2m(v) + 2.
  double m_slack(const std::set<Vertex>& q_live, Vertex u, Vertex v) const;

  /// Shrinks the live set S into a fresh vertex and returns its id.
  /// Parallel edges are merged, y(s) = x(delta(S))/2, m and pi accumulate.
  Vertex contract(const std::vector<Vertex>& s);

  /// Expands a set of live vertices to the original support vertices.
  std::vector<Vertex> expand(const std::set<Vertex>& q_live) const;
  const std::vector<Vertex>& preimage(Vertex v) const { return node(v).pre; }

  // Heap of vertices pending rule checks (LIFO).
  void heap_push(Vertex v);
  bool heap_empty() const { return heap_live_ == 0; }
  /// Pops the most recently pushed live vertex; returns 0 when exhausted.
  Vertex heap_pop();
  void heap_fill_all();

  /// True when some live vertex w outside {a, b} has y(w) >= c - tol.
  bool exists_other_with_y_at_least(double c, Vertex a, Vertex b) const;

  RuleCounts& rule_counts() { return counts_; }
  const RuleCounts& rule_counts() const { return counts_; }

  const std::vector<Vertex>& support_universe() const { return universe_; }

  /// The live graph viewed as a fractional point (fresh ids preserved).
  FractionalPoint as_point() const;

 private:
  struct Node {
    double y = 0.0;
    double m = 0.0;
    std::map<Vertex, double> adj;
    std::vector<Vertex> pre;  // sorted original ids
    bool alive = false;
    bool on_heap = false;
  };

  const Node& node(Vertex v) const;
  Node& node(Vertex v);

  std::map<Vertex, Node> data_;
  std::vector<Vertex> heap_;
  int heap_live_ = 0;
  int live_count_ = 0;
  Vertex next_id_ = 1;
  std::vector<Vertex> universe_;  // original support vertices, ascending
  RuleCounts counts_;
};

}  // namespace cycsec
