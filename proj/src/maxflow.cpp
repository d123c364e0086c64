#include "cycsec/maxflow.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cycsec {

namespace {
constexpr double kResidualEps = 1e-12;
}

void MinCutSolver::global_relabel(int n, int si, int ti) {
  // Exact residual distances: towards t where t is reachable, otherwise
  // n plus the residual distance to s, so trapped excess can drain back.
  std::fill(height_.begin(), height_.end(), 2 * n);
  std::deque<int> q;
  height_[ti] = 0;
  q.push_back(ti);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == si) continue;
    for (int a : adj_[v]) {
      int w = arcs_[a].to;
      if (height_[w] < 2 * n) continue;
      if (arcs_[a ^ 1].cap <= kResidualEps) continue;  // need room w -> v
      height_[w] = height_[v] + 1;
      q.push_back(w);
    }
  }
  height_[si] = n;
  q.push_back(si);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int a : adj_[v]) {
      int w = arcs_[a].to;
      if (height_[w] < 2 * n) continue;
      if (arcs_[a ^ 1].cap <= kResidualEps) continue;
      height_[w] = height_[v] + 1;
      q.push_back(w);
    }
  }

  std::fill(count_.begin(), count_.end(), 0);
  for (auto& b : bucket_) b.clear();
  std::fill(cur_.begin(), cur_.end(), 0);
  for (int v = 0; v < n; ++v) {
    if (height_[v] <= 2 * n) ++count_[height_[v]];
    if (v != si && v != ti && excess_[v] > kResidualEps && height_[v] < 2 * n)
      bucket_[height_[v]].push_back(v);
  }
}

IndexedCutResult MinCutSolver::st_min_cut_indexed(
    const std::vector<std::map<int, double>>& graph, int si, int ti) {
  if (si == ti) throw std::domain_error("s and t must differ");
  const int n = static_cast<int>(graph.size());

  arcs_.clear();
  adj_.assign(n, {});
  for (int i = 0; i < n; ++i) {
    for (const auto& [j, xe] : graph[i]) {
      if (i < j) {
        adj_[i].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({j, xe});
        adj_[j].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({i, xe});
      }
    }
  }

  excess_.assign(n, 0.0);
  height_.assign(n, 0);
  cur_.assign(n, 0);
  count_.assign(2 * n + 1, 0);
  bucket_.assign(2 * n + 1, {});

  for (int a : adj_[si]) {
    double d = arcs_[a].cap;
    if (d <= kResidualEps) continue;
    arcs_[a].cap = 0.0;
    arcs_[a ^ 1].cap += d;
    excess_[arcs_[a].to] += d;
    excess_[si] -= d;
  }
  global_relabel(n, si, ti);

  long relabels = 0;
  int hi = 2 * n - 1;
  while (hi >= 0) {
    if (bucket_[hi].empty()) {
      --hi;
      continue;
    }
    const int v = bucket_[hi].back();
    bucket_[hi].pop_back();
    if (height_[v] != hi || excess_[v] <= kResidualEps || v == si || v == ti)
      continue;

    bool rebuilt = false;
    while (excess_[v] > kResidualEps && height_[v] < 2 * n) {
      if (cur_[v] == static_cast<int>(adj_[v].size())) {
        const int old_h = height_[v];
        int new_h = 2 * n;
        for (int a : adj_[v])
          if (arcs_[a].cap > kResidualEps)
            new_h = std::min(new_h, height_[arcs_[a].to] + 1);
        cur_[v] = 0;
        --count_[old_h];
        if (count_[old_h] == 0 && old_h < n) {
          // Gap heuristic: the levels above old_h are cut off from t.
          for (int w = 0; w < n; ++w) {
            if (w != si && height_[w] > old_h && height_[w] < n) {
              --count_[height_[w]];
              height_[w] = n + 1;
              ++count_[height_[w]];
              // Keep relocated active vertices queued so their excess can
              // still drain back towards s in the second phase.
              if (w != ti && excess_[w] > kResidualEps)
                bucket_[height_[w]].push_back(w);
            }
          }
          hi = std::max(hi, n + 1);
          if (new_h < n) new_h = n + 1;
        }
        height_[v] = new_h;
        ++count_[new_h];
        ++relabels;
        if (relabels % n == 0) {
          global_relabel(n, si, ti);  // re-queues every active vertex
          hi = 2 * n - 1;
          rebuilt = true;
          break;
        }
        continue;
      }
      const int a = adj_[v][cur_[v]];
      const int w = arcs_[a].to;
      if (arcs_[a].cap > kResidualEps && height_[v] == height_[w] + 1) {
        const double d = std::min(excess_[v], arcs_[a].cap);
        const bool was_active = excess_[w] > kResidualEps;
        arcs_[a].cap -= d;
        arcs_[a ^ 1].cap += d;
        excess_[v] -= d;
        excess_[w] += d;
        if (!was_active && w != si && w != ti && height_[w] < 2 * n) {
          bucket_[height_[w]].push_back(w);
          // v may have climbed above the popped level through relabels, so
          // a newly activated neighbour can sit higher than hi.
          hi = std::max(hi, height_[w]);
        }
      } else {
        ++cur_[v];
      }
    }
    if (!rebuilt && excess_[v] > kResidualEps && height_[v] < 2 * n) {
      bucket_[height_[v]].push_back(v);
      hi = std::max(hi, height_[v]);
    }
  }

  // Minimal source side: residual reachability from s.
  IndexedCutResult res;
  res.source_side.assign(n, 0);
  std::deque<int> q;
  res.source_side[si] = 1;
  q.push_back(si);
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int a : adj_[v]) {
      if (arcs_[a].cap <= kResidualEps) continue;
      int w = arcs_[a].to;
      if (!res.source_side[w]) {
        res.source_side[w] = 1;
        q.push_back(w);
      }
    }
  }

  res.value = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!res.source_side[i]) continue;
    for (const auto& [j, xe] : graph[i])
      if (!res.source_side[j]) res.value += xe;
  }
  return res;
}

CutResult MinCutSolver::st_min_cut(const SupportGraph& g, Vertex s, Vertex t) {
  const std::vector<Vertex> verts = g.live_vertices();
  const int n = static_cast<int>(verts.size());
  std::map<Vertex, int> idx;
  for (int i = 0; i < n; ++i) idx[verts[i]] = i;

  std::vector<std::map<int, double>> graph(n);
  for (int i = 0; i < n; ++i)
    for (const auto& [w, xw] : g.neighbors(verts[i]))
      graph[i][idx.at(w)] = xw;

  IndexedCutResult raw = st_min_cut_indexed(graph, idx.at(s), idx.at(t));
  CutResult res;
  res.value = raw.value;
  for (int i = 0; i < n; ++i)
    if (raw.source_side[i]) res.source_side.insert(verts[i]);
  return res;
}

}  // namespace cycsec
