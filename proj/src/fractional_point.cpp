#include "cycsec/fractional_point.hpp"

#include <cmath>
#include <stdexcept>

namespace cycsec {

void FractionalPoint::set_y(Vertex v, double val) {
  if (v < 1 || v > n_vertices)
    throw std::invalid_argument("vertex id out of range");
  if (val > 0.0) y[v] = val;
}

void FractionalPoint::add_x(Vertex u, Vertex v, double val) {
  if (u == v) throw std::invalid_argument("loop edge");
  if (u < 1 || u > n_vertices || v < 1 || v > n_vertices)
    throw std::invalid_argument("edge endpoint out of range");
  if (val <= 0.0) return;
  x[edge_key(u, v)] += val;
}

std::vector<Vertex> FractionalPoint::support() const {
  std::vector<Vertex> s;
  s.reserve(y.size());
  for (const auto& [v, yy] : y) s.push_back(v);
  return s;
}

Diagnostics validate_point(const FractionalPoint& p, double tol) {
  for (const auto& [e, xe] : p.x) {
    if (e.first == e.second) throw std::invalid_argument("loop edge");
    if (xe <= 0.0) throw std::invalid_argument("non-positive stored edge");
  }
  Diagnostics d;
  std::map<Vertex, double> degree;
  for (const auto& [e, xe] : p.x) {
    degree[e.first] += xe;
    degree[e.second] += xe;
  }
  std::set<Vertex> verts;
  for (const auto& [v, yv] : p.y) verts.insert(v);
  for (const auto& [v, dv] : degree) verts.insert(v);

  for (Vertex v : verts) {
    const double yv = p.y_of(v);
    const double residual = degree.count(v) ? degree.at(v) - 2.0 * yv : -2.0 * yv;
    if (std::abs(residual) > tol) d.degree_violations.push_back({v, residual});
    if (yv < -tol || yv > 1.0 + tol) d.bound_violations.push_back({v, yv});
  }
  for (const auto& [e, xe] : p.x) {
    for (Vertex v : {e.first, e.second}) {
      const double excess = xe - p.y_of(v);
      if (excess > tol) d.logical_violations.push_back({v, e, excess});
    }
  }
  return d;
}

double cut_value(const FractionalPoint& p, const std::set<Vertex>& q) {
  if (q.empty()) throw std::invalid_argument("empty cut side");
  std::size_t inside = 0;
  for (Vertex v : q)
    if (p.y.count(v)) ++inside;
  if (inside == p.y.size() && q.size() >= p.y.size())
    throw std::invalid_argument("cut side covers the whole support");
  double total = 0.0;
  for (const auto& [e, xe] : p.x) {
    const bool a = q.count(e.first) > 0;
    const bool b = q.count(e.second) > 0;
    if (a != b) total += xe;
  }
  return total;
}

double sec_slack(const FractionalPoint& p, const std::set<Vertex>& q, Vertex u,
                 Vertex v) {
  if (!q.count(u)) throw std::invalid_argument("u must lie inside Q");
  if (q.count(v)) throw std::invalid_argument("v must lie outside Q");
  return cut_value(p, q) - 2.0 * p.y_of(u) - 2.0 * p.y_of(v) + 2.0;
}

}  // namespace cycsec
