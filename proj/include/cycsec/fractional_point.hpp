#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cycsec/types.hpp"

namespace cycsec {

using EdgeKey = std::pair<Vertex, Vertex>;  // always (min, max)

inline EdgeKey edge_key(Vertex u, Vertex v) {
  return u < v ? EdgeKey{u, v} : EdgeKey{v, u};
}

/// A fractional LP solution (y, x) restricted to its support: only strictly
/// positive vertex and edge weights are stored.
struct FractionalPoint {
  int n_vertices = 0;
  Vertex depot = 0;  // 0 = no depot
  std::map<Vertex, double> y;
  std::map<EdgeKey, double> x;

  double y_of(Vertex v) const {
    auto it = y.find(v);
    return it == y.end() ? 0.0 : it->second;
  }
  double x_of(Vertex u, Vertex v) const {
    auto it = x.find(edge_key(u, v));
    return it == x.end() ? 0.0 : it->second;
  }

  void set_y(Vertex v, double val);
  void add_x(Vertex u, Vertex v, double val);

  /// Support vertices in ascending order.
  std::vector<Vertex> support() const;
};

/// Violations of the assignment-polytope constraints: degree equations,
/// logical constraints and variable bounds. Empty diagnostics mean the point
/// lies in the assignment polytope.
struct Diagnostics {
  std::vector<std::pair<Vertex, double>> degree_violations;  // (v, residual)
  struct Logical {
    Vertex v;
    EdgeKey e;
    double excess;
  };
  std::vector<Logical> logical_violations;
  std::vector<std::pair<Vertex, double>> bound_violations;

  bool empty() const {
    return degree_violations.empty() && logical_violations.empty() &&
           bound_violations.empty();
  }
};

Diagnostics validate_point(const FractionalPoint& p, double tol = kEqTol);

/// x(delta(Q)): total edge weight crossing the cut defined by Q.
double cut_value(const FractionalPoint& p, const std::set<Vertex>& q);

/// Violation slack of the SEC <Q, u, v>: x(delta(Q)) - 2y_u - 2y_v + 2.
/// Requires u in Q and v outside Q.
double sec_slack(const FractionalPoint& p, const std::set<Vertex>& q, Vertex u,
                 Vertex v);

}  // namespace cycsec
