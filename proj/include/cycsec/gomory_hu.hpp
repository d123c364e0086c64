#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cycsec/maxflow.hpp"
#include "cycsec/rng.hpp"
#include "cycsec/support_graph.hpp"

namespace cycsec {

/// Directed rooted Gomory-Hu tree over the live vertices of a support graph.
/// Arcs point away from the root; the arc into v carries the (parent, v)
/// minimum cut weight and the argmax-m witness over v's descendant side.
struct GHTree {
  Vertex root = 0;
  std::map<Vertex, Vertex> parent;              // absent for the root
  std::map<Vertex, std::set<Vertex>> children;
  std::map<Vertex, double> w;                   // arc weight, keyed by child
  std::map<Vertex, Vertex> u_wit;               // subtree argmax-m, incl. root

  /// Descendant side Δ(v): v and everything below it.
  std::set<Vertex> descendants(Vertex v) const;
};

/// Recursive Gomory-Hu construction with contraction. The root is a live
/// vertex of maximum m (ties broken by rng); pier pairs are drawn from rng.
GHTree build_gh_tree(const SupportGraph& g, Rng& rng);

/// Independent check: arc weights against fresh min cuts, witnesses against
/// a from-scratch subtree scan.
bool verify_gh_tree(const SupportGraph& g, const GHTree& tree);

/// Indented debug dump: vertex, parent, w_a, u_a per line.
std::string dump_gh_tree(const GHTree& tree);

}  // namespace cycsec
