#include "cycsec/shrink.hpp"

#include <chrono>
#include <cmath>

namespace cycsec {

namespace {

bool eq(double a, double b) { return std::abs(a - b) <= kEqTol; }

/// Live neighbors of several vertices, ascending, minus the vertices
/// themselves.
std::vector<Vertex> joint_neighborhood(const SupportGraph& g,
                                       const std::vector<Vertex>& hub) {
  std::set<Vertex> out;
  for (Vertex v : hub)
    for (const auto& [w, xw] : g.neighbors(v)) out.insert(w);
  for (Vertex v : hub) out.erase(v);
  return {out.begin(), out.end()};
}

std::optional<RuleMatch> match_c1(const SupportGraph& g, Vertex u) {
  const double c = g.y(u);
  for (const auto& [v, xuv] : g.neighbors(u)) {
    if (!eq(g.y(v), c) || !eq(xuv, c)) continue;
    for (const auto& [t, xvt] : g.neighbors(v)) {
      if (t == u) continue;
      if (eq(g.y(t), c) && eq(xvt, c)) return RuleMatch{{u, v}, t};
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> match_c2(const SupportGraph& g, Vertex u) {
  const double c = g.y(u);
  for (const auto& [v, xuv] : g.neighbors(u)) {
    if (!eq(g.y(v), c) || !eq(xuv, c)) continue;
    for (const auto& [t, xvt] : g.neighbors(v)) {
      if (t == u) continue;
      if (eq(g.y(t), c) && eq(g.x(u, t) + xvt, c)) return RuleMatch{{u, v}, t};
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> match_c3(const SupportGraph& g, Vertex u) {
  const double c = g.y(u);
  for (const auto& [v, xuv] : g.neighbors(u)) {
    if (!eq(g.y(v), c)) continue;
    for (Vertex w : joint_neighborhood(g, {u, v})) {
      if (!eq(g.y(w), c)) continue;
      if (!eq(xuv + g.x(u, w) + g.x(v, w), 2.0 * c)) continue;
      for (Vertex t : joint_neighborhood(g, {u, v, w})) {
        if (!eq(g.y(t), c)) continue;
        if (eq(g.x(u, t) + g.x(v, t) + g.x(w, t), c))
          return RuleMatch{{u, v, w}, t};
      }
    }
  }
  return std::nullopt;
}

std::optional<RuleMatch> match_s1(const SupportGraph& g, Vertex u) {
  const double c = g.y(u);
  for (const auto& [v, xuv] : g.neighbors(u)) {
    if (!eq(g.y(v), c) || !eq(xuv, c)) continue;
    if (g.exists_other_with_y_at_least(c, u, v)) return RuleMatch{{u, v}, 0};
  }
  return std::nullopt;
}

std::optional<RuleMatch> match_s2(const SupportGraph& g, Vertex u) {
  for (const auto& [v, xuv] : g.neighbors(u)) {
    if (xuv > g.y(u) + kEqTol && xuv > g.y(v) + kEqTol)
      return RuleMatch{{u, v}, 0};
  }
  return std::nullopt;
}

}  // namespace

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::NO: return "NO";
    case Strategy::C1: return "C1";
    case Strategy::C1C2: return "C1C2";
    case Strategy::C1C2C3: return "C1C2C3";
    case Strategy::S1: return "S1";
    case Strategy::S1S2: return "S1S2";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
  for (Strategy s : {Strategy::NO, Strategy::C1, Strategy::C1C2,
                     Strategy::C1C2C3, Strategy::S1, Strategy::S1S2})
    if (name == strategy_name(s)) return s;
  return std::nullopt;
}

const std::vector<ShrinkRule>& strategy_rules(Strategy s) {
  static const std::vector<ShrinkRule> no{};
  static const std::vector<ShrinkRule> c1{ShrinkRule::C1};
  static const std::vector<ShrinkRule> c1c2{ShrinkRule::C1, ShrinkRule::C2};
  static const std::vector<ShrinkRule> c1c2c3{ShrinkRule::C1, ShrinkRule::C2,
                                              ShrinkRule::C3};
  static const std::vector<ShrinkRule> s1{ShrinkRule::S1};
  static const std::vector<ShrinkRule> s1s2{ShrinkRule::S1, ShrinkRule::S2};
  switch (s) {
    case Strategy::NO: return no;
    case Strategy::C1: return c1;
    case Strategy::C1C2: return c1c2;
    case Strategy::C1C2C3: return c1c2c3;
    case Strategy::S1: return s1;
    case Strategy::S1S2: return s1s2;
  }
  return no;
}

std::optional<RuleMatch> rule_applicable(const SupportGraph& g, ShrinkRule rule,
                                         Vertex u) {
  switch (rule) {
    case ShrinkRule::C1: return match_c1(g, u);
    case ShrinkRule::C2: return match_c2(g, u);
    case ShrinkRule::C3: return match_c3(g, u);
    case ShrinkRule::S1: return match_s1(g, u);
    case ShrinkRule::S2: return match_s2(g, u);
  }
  return std::nullopt;
}

Vertex shrink_update(SupportGraph& g, const std::vector<Vertex>& s_set,
                     QRepository& repo) {
  const Vertex s = g.contract(s_set);
  std::vector<Vertex> nbrs;
  for (const auto& [n, xn] : g.neighbors(s)) nbrs.push_back(n);

  for (Vertex n : nbrs) {
    const double xns = g.x(n, s);
    if (g.y(n) < xns - kEqTol) {
      // Violated logical constraint at [n,s]: {s,n} is a Q candidate.
      const std::set<Vertex> q_live{s, n};
      for (Vertex r : g.live_vertices()) {
        if (r == s || r == n || g.m(r) < 1.0 - kEqTol) continue;
        const double slack = g.m_slack(q_live, s, r);
        if (slack < -kViolationTol) {
          const auto orig = g.expand(q_live);
          repo.add({orig.begin(), orig.end()}, slack);
          break;
        }
      }
    }
    g.heap_push(n);
  }
  g.heap_push(s);
  return s;
}

ShrinkReport run_strategy(SupportGraph& g, Strategy strat, QRepository& repo,
                          Rng& rng, bool refill) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto& rules = strategy_rules(strat);
  const RuleCounts before = g.rule_counts();
  const std::size_t q_before = repo.size();

  if (!rules.empty()) {
    if (refill) {
      std::vector<Vertex> live = g.live_vertices();
      rng.shuffle(live);
      for (Vertex v : live) g.heap_push(v);
    }
    Vertex u;
    while ((u = g.heap_pop()) != 0) {
      for (ShrinkRule rule : rules) {
        auto match = rule_applicable(g, rule, u);
        if (!match) continue;
        switch (rule) {
          case ShrinkRule::C1: ++g.rule_counts().c1; break;
          case ShrinkRule::C2: ++g.rule_counts().c2; break;
          case ShrinkRule::C3: ++g.rule_counts().c3; break;
          case ShrinkRule::S1: ++g.rule_counts().s1; break;
          case ShrinkRule::S2: ++g.rule_counts().s2; break;
        }
        shrink_update(g, match->s, repo);
        break;
      }
    }
  }

  ShrinkReport rep;
  rep.final_vertices = g.live_vertex_count();
  rep.final_edges = g.live_edge_count();
  const RuleCounts& after = g.rule_counts();
  rep.counts.c1 = after.c1 - before.c1;
  rep.counts.c2 = after.c2 - before.c2;
  rep.counts.c3 = after.c3 - before.c3;
  rep.counts.s1 = after.s1 - before.s1;
  rep.counts.s2 = after.s2 - before.s2;
  rep.q_found = static_cast<long>(repo.size() - q_before);
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

}  // namespace cycsec
