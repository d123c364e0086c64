#include "cycsec/gomory_hu.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace cycsec {

namespace {

struct SubNode {
  std::vector<Vertex> members;
  bool meta = false;
  std::map<int, double> adj;
};

struct Builder {
  const SupportGraph& g;
  Rng& rng;
  GHTree& t;
  MinCutSolver solver;

  Vertex subtree_best(Vertex v) const {
    Vertex best = v;
    auto it = t.children.find(v);
    if (it != t.children.end()) {
      for (Vertex c : it->second) {
        Vertex wc = t.u_wit.at(c);
        if (g.m(wc) > g.m(best)) best = wc;
      }
    }
    return best;
  }

  void add_arc(Vertex r, Vertex a, Vertex b, const std::set<Vertex>& a_live,
               double val) {
    const bool r_in_a = a_live.count(r) > 0;
    const Vertex far = r_in_a ? b : a;
    auto same_side_as_r = [&](Vertex v) {
      return (a_live.count(v) > 0) == r_in_a;
    };

    // Children of r on the far side of the cut follow the far pier.
    std::vector<Vertex> moved;
    for (Vertex c : t.children[r])
      if (!same_side_as_r(c)) moved.push_back(c);
    for (Vertex c : moved) {
      t.children[r].erase(c);
      t.children[far].insert(c);
      t.parent[c] = far;
    }

    const Vertex pr = t.parent.count(r) ? t.parent.at(r) : 0;
    const bool splice = pr != 0 && !same_side_as_r(pr);
    if (!splice) {
      t.parent[far] = r;
      t.w[far] = val;
      t.children[r].insert(far);
    } else {
      // far takes r's slot under pr and r hangs below far.
      t.parent[far] = pr;
      t.w[far] = t.w.at(r);
      t.children[pr].erase(r);
      t.children[pr].insert(far);
      t.parent[r] = far;
      t.w[r] = val;
      t.children[far].insert(r);
    }

    t.u_wit[far] = far;
    if (!splice) {
      t.u_wit[far] = subtree_best(far);
      t.u_wit[r] = subtree_best(r);
    } else {
      t.u_wit[r] = subtree_best(r);
      t.u_wit[far] = subtree_best(far);
    }

    // far is new in every subtree above it; witnesses are monotone up the
    // chain, so stop at the first one it fails to beat.
    Vertex up = pr;
    Vertex cand = far;
    while (up != 0) {
      if (g.m(cand) > g.m(t.u_wit.at(up))) {
        t.u_wit[up] = cand;
        up = t.parent.count(up) ? t.parent.at(up) : 0;
      } else {
        break;
      }
    }
  }

  void recurse(const std::vector<SubNode>& nodes, Vertex root) {
    std::vector<int> c_idx;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (!nodes[i].meta) c_idx.push_back(i);
    if (c_idx.size() < 2) return;

    const int ai = c_idx[rng.next_index(c_idx.size())];
    std::vector<int> rest;
    for (int i : c_idx)
      if (i != ai) rest.push_back(i);
    const int bi = rest[rng.next_index(rest.size())];
    const Vertex a = nodes[ai].members.front();
    const Vertex b = nodes[bi].members.front();

    std::vector<std::map<int, double>> graph(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) graph[i] = nodes[i].adj;
    IndexedCutResult cut = solver.st_min_cut_indexed(
        graph, ai, bi);

    std::set<Vertex> a_live;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (cut.source_side[i])
        a_live.insert(nodes[i].members.begin(), nodes[i].members.end());

    add_arc(root, a, b, a_live, cut.value);
    const bool r_in_a = a_live.count(root) > 0;
    const Vertex r_a = r_in_a ? root : a;
    const Vertex r_b = r_in_a ? b : root;

    recurse(contracted(nodes, cut.source_side, true), r_a);
    recurse(contracted(nodes, cut.source_side, false), r_b);
  }

  /// Keeps the nodes whose side flag equals keep and merges the rest into
  /// one meta node.
  static std::vector<SubNode> contracted(const std::vector<SubNode>& nodes,
                                         const std::vector<char>& side,
                                         bool keep) {
    std::vector<SubNode> out;
    std::vector<int> remap(nodes.size(), -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if ((side[i] != 0) == keep) {
        remap[i] = static_cast<int>(out.size());
        SubNode n;
        n.members = nodes[i].members;
        n.meta = nodes[i].meta;
        out.push_back(std::move(n));
      }
    }
    const int meta_idx = static_cast<int>(out.size());
    SubNode meta;
    meta.meta = true;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if ((side[i] != 0) != keep)
        meta.members.insert(meta.members.end(), nodes[i].members.begin(),
                            nodes[i].members.end());
    out.push_back(std::move(meta));

    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (remap[i] < 0) continue;
      for (const auto& [j, xe] : nodes[i].adj) {
        const int tgt = remap[j] < 0 ? meta_idx : remap[j];
        out[remap[i]].adj[tgt] += xe;
        if (remap[j] < 0) out[meta_idx].adj[remap[i]] += xe;
      }
    }
    return out;
  }
};

}  // namespace

std::set<Vertex> GHTree::descendants(Vertex v) const {
  std::set<Vertex> out{v};
  std::deque<Vertex> q{v};
  while (!q.empty()) {
    Vertex cur = q.front();
    q.pop_front();
    auto it = children.find(cur);
    if (it == children.end()) continue;
    for (Vertex c : it->second) {
      out.insert(c);
      q.push_back(c);
    }
  }
  return out;
}

GHTree build_gh_tree(const SupportGraph& g, Rng& rng) {
  const std::vector<Vertex> live = g.live_vertices();
  if (live.size() < 2) throw std::domain_error("tree needs >= 2 live vertices");

  double mx = g.m(live.front());
  for (Vertex v : live) mx = std::max(mx, g.m(v));
  std::vector<Vertex> top;
  for (Vertex v : live)
    if (g.m(v) >= mx - kEqTol) top.push_back(v);

  GHTree t;
  t.root = top[rng.next_index(top.size())];
  t.u_wit[t.root] = t.root;

  std::map<Vertex, int> idx;
  for (std::size_t i = 0; i < live.size(); ++i) idx[live[i]] = static_cast<int>(i);
  std::vector<SubNode> nodes(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    nodes[i].members = {live[i]};
    for (const auto& [w, xw] : g.neighbors(live[i]))
      nodes[i].adj[idx.at(w)] = xw;
  }

  Builder builder{g, rng, t, {}};
  builder.recurse(nodes, t.root);
  return t;
}

bool verify_gh_tree(const SupportGraph& g, const GHTree& tree) {
  const std::vector<Vertex> live = g.live_vertices();
  if (tree.descendants(tree.root).size() != live.size()) return false;
  if (tree.parent.count(tree.root)) return false;

  MinCutSolver solver;
  for (Vertex v : live) {
    if (v == tree.root) continue;
    auto pit = tree.parent.find(v);
    if (pit == tree.parent.end()) return false;
    CutResult cut = solver.st_min_cut(g, pit->second, v);
    if (std::abs(cut.value - tree.w.at(v)) > 1e-9) return false;
  }
  for (Vertex v : live) {
    const std::set<Vertex> desc = tree.descendants(v);
    auto wit = tree.u_wit.find(v);
    if (wit == tree.u_wit.end() || !desc.count(wit->second)) return false;
    double best = 0.0;
    for (Vertex d : desc) best = std::max(best, g.m(d));
    if (std::abs(g.m(wit->second) - best) > 1e-9) return false;
  }
  return true;
}

std::string dump_gh_tree(const GHTree& tree) {
  std::ostringstream out;
  struct Frame {
    Vertex v;
    int depth;
  };
  std::vector<Frame> stack{{tree.root, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    for (int i = 0; i < f.depth; ++i) out << "  ";
    out << f.v;
    auto pit = tree.parent.find(f.v);
    if (pit == tree.parent.end())
      out << " root";
    else
      out << " parent=" << pit->second << " w=" << tree.w.at(f.v);
    out << " u=" << tree.u_wit.at(f.v) << "\n";
    auto cit = tree.children.find(f.v);
    if (cit != tree.children.end())
      for (auto it = cit->second.rbegin(); it != cit->second.rend(); ++it)
        stack.push_back({*it, f.depth + 1});
  }
  return out.str();
}

}  // namespace cycsec
