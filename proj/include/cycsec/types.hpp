#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace cycsec {

using Vertex = int;

// Numerical tolerances used across the engine. LP solutions carry solver
// noise, so equality-style hypotheses are checked with an absolute
// tolerance and an inequality only counts as violated past a slack margin.
inline constexpr double kStructTol = 1e-9;
inline constexpr double kEqTol = 1e-9;
inline constexpr double kViolationTol = 1e-6;

/// A subcycle elimination constraint <Q, u, v> with u in Q, v outside,
/// together with its violation slack x(delta(Q)) - 2y_u - 2y_v + 2.
struct SEC {
  std::vector<Vertex> q;  // sorted original vertex ids
  Vertex u = 0;
  Vertex v = 0;
  double slack = 0.0;
};

}  // namespace cycsec
