#pragma once

#include <map>
#include <set>
#include <vector>

#include "cycsec/support_graph.hpp"
#include "cycsec/types.hpp"

namespace cycsec {

struct CutResult {
  double value = 0.0;
  std::set<Vertex> source_side;
};

struct IndexedCutResult {
  double value = 0.0;
  std::vector<char> source_side;  // indexed by vertex, 1 = s side
};

/// (s,t)-minimum-cut solver: push-relabel with highest-level selection,
/// gap heuristic and periodic global relabeling. Scratch buffers persist
/// across solves; one solve at a time per instance.
class MinCutSolver {
 public:
  CutResult st_min_cut(const SupportGraph& g, Vertex s, Vertex t);

  /// Same solver on a plain indexed adjacency structure.
  IndexedCutResult st_min_cut_indexed(
      const std::vector<std::map<int, double>>& graph, int s, int t);

 private:
  struct Arc {
    int to;
    double cap;  // residual capacity
  };

  void global_relabel(int n, int si, int ti);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;  // arc indices per vertex
  std::vector<double> excess_;
  std::vector<int> height_;
  std::vector<int> cur_;
  std::vector<int> count_;                // vertices per height
  std::vector<std::vector<int>> bucket_;  // active vertices per height
};

}  // namespace cycsec
