#pragma once

#include "cycsec/fractional_point.hpp"

namespace fixtures {

using cycsec::FractionalPoint;

/// Two disjoint unit triangles {1,2,3} and {4,5,6}; every SEC over a single
/// triangle is violated with slack -2.
inline FractionalPoint t2() {
  FractionalPoint p;
  p.n_vertices = 6;
  for (int v = 1; v <= 6; ++v) p.set_y(v, 1.0);
  for (int base : {1, 4}) {
    p.add_x(base, base + 1, 1.0);
    p.add_x(base + 1, base + 2, 1.0);
    p.add_x(base + 2, base, 1.0);
  }
  return p;
}

/// Unit 6-cycle; a feasible tour with no violated SEC.
inline FractionalPoint c6() {
  FractionalPoint p;
  p.n_vertices = 6;
  for (int v = 1; v <= 6; ++v) p.set_y(v, 1.0);
  for (int v = 1; v <= 6; ++v) p.add_x(v, v % 6 + 1, 1.0);
  return p;
}

/// Fractional point with a heavy 1-2-3 path and a light tail; SEC-free but
/// rich enough to exercise rules S1 and S2 after contraction.
inline FractionalPoint f1() {
  FractionalPoint p;
  p.n_vertices = 6;
  for (int v = 1; v <= 3; ++v) p.set_y(v, 1.0);
  for (int v = 4; v <= 6; ++v) p.set_y(v, 0.5);
  p.add_x(1, 2, 1.0);
  p.add_x(2, 3, 1.0);
  p.add_x(3, 1, 0.5);
  p.add_x(3, 4, 0.5);
  p.add_x(4, 5, 0.5);
  p.add_x(5, 6, 0.5);
  p.add_x(6, 1, 0.5);
  return p;
}

/// All-unit-y point where rule C2 matches at vertex 3 while rule C1 does not.
inline FractionalPoint p5() {
  FractionalPoint p;
  p.n_vertices = 5;
  for (int v = 1; v <= 5; ++v) p.set_y(v, 1.0);
  p.add_x(1, 2, 1.0);
  p.add_x(5, 1, 1.0);
  p.add_x(2, 3, 0.5);
  p.add_x(3, 4, 1.0);
  p.add_x(4, 5, 0.5);
  p.add_x(2, 4, 0.5);
  p.add_x(3, 5, 0.5);
  return p;
}

/// Minimal two-vertex support with a single fractional edge.
inline FractionalPoint k2() {
  FractionalPoint p;
  p.n_vertices = 2;
  p.set_y(1, 0.35);
  p.set_y(2, 0.35);
  p.add_x(1, 2, 0.7);
  return p;
}

/// Three disjoint unit triangles on nine vertices.
inline FractionalPoint t3() {
  FractionalPoint p;
  p.n_vertices = 9;
  for (int v = 1; v <= 9; ++v) p.set_y(v, 1.0);
  for (int base : {1, 4, 7}) {
    p.add_x(base, base + 1, 1.0);
    p.add_x(base + 1, base + 2, 1.0);
    p.add_x(base + 2, base, 1.0);
  }
  return p;
}

/// Seven-vertex point whose two fractional triangles are contractible only
/// through rule C3: no edge meets the x = y gate of rules C1/C2.
inline FractionalPoint c3f() {
  FractionalPoint p;
  p.n_vertices = 7;
  const double a = 1.0 / 3.0;
  const double b = 2.0 / 3.0;
  for (int v = 1; v <= 7; ++v) p.set_y(v, 1.0);
  p.add_x(1, 2, b);
  p.add_x(1, 3, b);
  p.add_x(2, 3, b);
  p.add_x(4, 5, b);
  p.add_x(4, 6, b);
  p.add_x(5, 6, b);
  p.add_x(1, 7, a);
  p.add_x(2, 7, a);
  p.add_x(3, 7, a);
  p.add_x(4, 7, a);
  p.add_x(5, 7, a);
  p.add_x(6, 7, a);
  p.add_x(1, 4, a);
  p.add_x(2, 5, a);
  p.add_x(3, 6, a);
  return p;
}

}  // namespace fixtures
