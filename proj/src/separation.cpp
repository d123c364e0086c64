#include "cycsec/separation.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "cycsec/maxflow.hpp"

namespace cycsec {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

/// Live vertices sorted by m descending, ties resolved by rng.
std::vector<Vertex> m_order(const SupportGraph& g, Rng& rng) {
  std::vector<Vertex> order = g.live_vertices();
  rng.shuffle(order);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.m(a) > g.m(b); });
  return order;
}

void save_if_violated(SupportGraph& g, QRepository& repo,
                      const std::set<Vertex>& q_live, Vertex u, Vertex v,
                      double cut_val) {
  const double slack = cut_val - 2.0 * g.m(u) - 2.0 * g.m(v) + 2.0;
  if (slack < -kViolationTol) {
    const auto orig = g.expand(q_live);
    repo.add({orig.begin(), orig.end()}, slack);
  }
}

void run_eh(SupportGraph& g, QRepository& repo, SeparationStats& st,
            Rng& rng) {
  const std::vector<Vertex> order = m_order(g, rng);
  if (order.size() < 2) return;
  MinCutSolver solver;
  const Vertex v1 = order.front();
  for (std::size_t i = 1; i < order.size(); ++i) {
    CutResult cut = solver.st_min_cut(g, v1, order[i]);
    ++st.mincut_solves;
    save_if_violated(g, repo, cut.source_side, v1, order[i], cut.value);
  }
}

void run_dh(SupportGraph& g, QRepository& repo, SeparationStats& st, Rng& rng,
            bool internal_shrink, Strategy strat) {
  std::vector<Vertex> order = m_order(g, rng);
  MinCutSolver solver;
  const RuleCounts before = g.rule_counts();

  while (g.live_vertex_count() > 1) {
    const Vertex v1 = order[0];
    const Vertex v2 = order[1];
    CutResult cut = solver.st_min_cut(g, v1, v2);
    ++st.mincut_solves;
    save_if_violated(g, repo, cut.source_side, v1, v2, cut.value);

    const bool reorder = g.x(v1, v2) > g.y(v2);

    if (internal_shrink) {
      shrink_update(g, {v1, v2}, repo);
      run_strategy(g, strat, repo, rng, /*refill=*/false);
      order = m_order(g, rng);
    } else {
      const Vertex s = g.contract({v1, v2});
      order.erase(order.begin(), order.begin() + 2);
      // Only the merged vertex has a new key, so reordering is a single
      // reinsertion instead of a full sort.
      auto pos = order.begin();
      if (reorder)
        pos = std::lower_bound(
            order.begin(), order.end(), g.m(s),
            [&](Vertex a, double value) { return g.m(a) > value; });
      order.insert(pos, s);
    }
  }

  if (internal_shrink) {
    const RuleCounts& after = g.rule_counts();
    st.dhi_extra = (after.c1 - before.c1) + (after.c2 - before.c2) +
                   (after.s1 - before.s1) + (after.s2 - before.s2) +
                   2 * (after.c3 - before.c3);
  }
}

void run_epg(SupportGraph& g, QRepository& repo, SeparationStats& st,
             Rng& rng, bool pair_scan) {
  if (g.live_vertex_count() < 2) return;
  GHTree tree = build_gh_tree(g, rng);
  st.mincut_solves += g.live_vertex_count() - 1;

  const double m_root = g.m(tree.root);
  for (const auto& [v, parent] : tree.parent) {
    const double slack =
        tree.w.at(v) - 2.0 * g.m(tree.u_wit.at(v)) - 2.0 * m_root + 2.0;
    if (slack < -kViolationTol) {
      const auto orig = g.expand(tree.descendants(v));
      repo.add({orig.begin(), orig.end()}, slack);
    }
  }
  if (pair_scan) epg_pair_scan(tree, g, repo);
}

}  // namespace

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::EH: return "EH";
    case Algo::DH: return "DH";
    case Algo::DHI: return "DHI";
    case Algo::EPG: return "EPG";
  }
  return "?";
}

std::optional<Algo> algo_from_name(const std::string& name) {
  for (Algo a : {Algo::EH, Algo::DH, Algo::DHI, Algo::EPG})
    if (name == algo_name(a)) return a;
  return std::nullopt;
}

SeparationResult separate(const FractionalPoint& p, Algo algo, Strategy strat,
                          Rng& rng, bool pair_scan, bool skip_if_preprocess) {
  Diagnostics diag = validate_point(p);
  if (!diag.degree_violations.empty())
    throw std::invalid_argument("point violates the degree equations");

  SupportGraph g = SupportGraph::from_point(p);
  SeparationResult res{QRepository(g.support_universe()), {}};
  SeparationStats& st = res.stats;
  st.algo = algo;
  st.strategy = strat;

  ShrinkReport prep = run_strategy(g, strat, res.repo, rng);
  st.preprocess_ms = prep.elapsed_ms;
  st.preprocess_q = prep.q_found;
  st.rule_counts = prep.counts;
  st.shrunk_vertices = prep.final_vertices;
  st.shrunk_edges = prep.final_edges;

  if (skip_if_preprocess && st.preprocess_q > 0) return res;

  const auto t0 = Clock::now();
  const std::size_t q_before = res.repo.size();
  switch (algo) {
    case Algo::EH: run_eh(g, res.repo, st, rng); break;
    case Algo::DH: run_dh(g, res.repo, st, rng, false, strat); break;
    case Algo::DHI: run_dh(g, res.repo, st, rng, true, strat); break;
    case Algo::EPG: run_epg(g, res.repo, st, rng, pair_scan); break;
  }
  st.separation_q = static_cast<long>(res.repo.size() - q_before);
  st.separation_ms = ms_since(t0);
  return res;
}

long epg_pair_scan(const GHTree& tree, const SupportGraph& g,
                   QRepository& repo) {
  std::vector<Vertex> heads;
  for (const auto& [v, parent] : tree.parent) heads.push_back(v);
  std::vector<std::set<Vertex>> desc;
  desc.reserve(heads.size());
  for (Vertex v : heads) desc.push_back(tree.descendants(v));

  const double m_root = g.m(tree.root);
  long added = 0;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    for (std::size_t j = i + 1; j < heads.size(); ++j) {
      // The w_a + w_f bound only caps the union's cut for disjoint sides.
      if (desc[i].count(heads[j]) || desc[j].count(heads[i])) continue;
      const double top = std::max(g.m(tree.u_wit.at(heads[i])),
                                  g.m(tree.u_wit.at(heads[j])));
      const double slack = tree.w.at(heads[i]) + tree.w.at(heads[j]) -
                           2.0 * top - 2.0 * m_root + 2.0;
      if (slack < -kViolationTol) {
        std::set<Vertex> both = desc[i];
        both.insert(desc[j].begin(), desc[j].end());
        const auto orig = g.expand(both);
        if (repo.add({orig.begin(), orig.end()}, slack)) ++added;
      }
    }
  }
  return added;
}

}  // namespace cycsec
