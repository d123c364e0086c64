#include "cycsec/support_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cycsec {

const SupportGraph::Node& SupportGraph::node(Vertex v) const {
  auto it = data_.find(v);
  if (it == data_.end() || !it->second.alive)
    throw std::invalid_argument("dead or unknown vertex " + std::to_string(v));
  return it->second;
}

SupportGraph::Node& SupportGraph::node(Vertex v) {
  auto it = data_.find(v);
  if (it == data_.end() || !it->second.alive)
    throw std::invalid_argument("dead or unknown vertex " + std::to_string(v));
  return it->second;
}

SupportGraph SupportGraph::from_point(const FractionalPoint& p) {
  SupportGraph g;
  g.next_id_ = p.n_vertices + 1;
  for (const auto& [v, yv] : p.y) {
    Node n;
    n.y = yv;
    n.m = yv;
    n.pre = {v};
    n.alive = true;
    g.data_.emplace(v, std::move(n));
    g.universe_.push_back(v);
    ++g.live_count_;
  }
  for (const auto& [e, xe] : p.x) {
    if (!g.alive(e.first) || !g.alive(e.second))
      throw std::invalid_argument("support edge touches a vertex with y = 0");
    g.data_.at(e.first).adj[e.second] = xe;
    g.data_.at(e.second).adj[e.first] = xe;
  }
  return g;
}

std::vector<Vertex> SupportGraph::live_vertices() const {
  std::vector<Vertex> out;
  out.reserve(live_count_);
  for (const auto& [v, n] : data_)
    if (n.alive) out.push_back(v);
  return out;
}

int SupportGraph::live_edge_count() const {
  int twice = 0;
  for (const auto& [v, n] : data_)
    if (n.alive) twice += static_cast<int>(n.adj.size());
  return twice / 2;
}

double SupportGraph::x(Vertex u, Vertex v) const {
  const auto& adj = node(u).adj;
  node(v);
  auto it = adj.find(v);
  return it == adj.end() ? 0.0 : it->second;
}

double SupportGraph::degree(Vertex v) const {
  double d = 0.0;
  for (const auto& [w, xw] : node(v).adj) d += xw;
  return d;
}

double SupportGraph::cut_value(const std::set<Vertex>& q_live) const {
  if (q_live.empty()) throw std::invalid_argument("empty cut side");
  if (static_cast<int>(q_live.size()) >= live_count_)
    throw std::invalid_argument("cut side covers the whole graph");
  double total = 0.0;
  for (Vertex v : q_live)
    for (const auto& [w, xw] : node(v).adj)
      if (!q_live.count(w)) total += xw;
  return total;
}

double SupportGraph::m_slack(const std::set<Vertex>& q_live, Vertex u,
                             Vertex v) const {
  if (!q_live.count(u)) throw std::invalid_argument("u must lie inside Q");
  if (q_live.count(v)) throw std::invalid_argument("v must lie outside Q");
  return cut_value(q_live) - 2.0 * m(u) - 2.0 * m(v) + 2.0;
}

Vertex SupportGraph::contract(const std::vector<Vertex>& s_vec) {
  std::set<Vertex> s(s_vec.begin(), s_vec.end());
  if (s.size() < 2) throw std::invalid_argument("contraction needs >= 2 vertices");

  Node merged;
  double boundary = 0.0;
  for (Vertex v : s) {
    Node& n = node(v);
    merged.m = std::max(merged.m, n.m);
    merged.pre.insert(merged.pre.end(), n.pre.begin(), n.pre.end());
    for (const auto& [w, xw] : n.adj) {
      if (s.count(w)) continue;
      merged.adj[w] += xw;
      boundary += xw;
    }
  }
  merged.y = boundary / 2.0;
  std::sort(merged.pre.begin(), merged.pre.end());
  merged.alive = true;

  const Vertex id = next_id_++;
  for (Vertex v : s) {
    Node& n = data_.at(v);
    for (const auto& [w, xw] : n.adj)
      if (!s.count(w)) data_.at(w).adj.erase(v);
    n.adj.clear();
    n.pre.clear();
    n.alive = false;
    if (n.on_heap) {
      n.on_heap = false;
      --heap_live_;
    }
    --live_count_;
  }
  for (const auto& [w, xw] : merged.adj) data_.at(w).adj[id] = xw;
  data_.emplace(id, std::move(merged));
  ++live_count_;
  return id;
}

std::vector<Vertex> SupportGraph::expand(const std::set<Vertex>& q_live) const {
  std::vector<Vertex> out;
  for (Vertex v : q_live) {
    const auto& pre = node(v).pre;
    out.insert(out.end(), pre.begin(), pre.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

void SupportGraph::heap_push(Vertex v) {
  Node& n = node(v);
  if (n.on_heap) return;
  n.on_heap = true;
  heap_.push_back(v);
  ++heap_live_;
}

Vertex SupportGraph::heap_pop() {
  while (!heap_.empty()) {
    Vertex v = heap_.back();
    heap_.pop_back();
    auto it = data_.find(v);
    if (it == data_.end() || !it->second.alive || !it->second.on_heap) continue;
    it->second.on_heap = false;
    --heap_live_;
    return v;
  }
  return 0;
}

void SupportGraph::heap_fill_all() {
  for (const auto& [v, n] : data_)
    if (n.alive) heap_push(v);
}

bool SupportGraph::exists_other_with_y_at_least(double c, Vertex a,
                                                Vertex b) const {
  for (const auto& [v, n] : data_)
    if (n.alive && v != a && v != b && n.y >= c - kEqTol) return true;
  return false;
}

FractionalPoint SupportGraph::as_point() const {
  FractionalPoint p;
  p.n_vertices = next_id_ - 1;
  for (const auto& [v, n] : data_) {
    if (!n.alive) continue;
    if (n.y > 0.0) p.y[v] = n.y;
    for (const auto& [w, xw] : n.adj)
      if (v < w) p.x[edge_key(v, w)] = xw;
  }
  return p;
}

}  // namespace cycsec
