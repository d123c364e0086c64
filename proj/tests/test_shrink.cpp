#include <algorithm>
#include <set>
#include <vector>

#include "cycsec/instance_io.hpp"
#include "cycsec/oracle.hpp"
#include "cycsec/shrink.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cycsec;

namespace {

QRepository make_repo(const SupportGraph& g) {
  return QRepository(g.support_universe());
}

std::vector<std::vector<Vertex>> repo_sets(const QRepository& repo) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& e : repo.entries()) out.push_back(e.q);
  return out;
}

}  // namespace

TEST_CASE("strategy names round trip") {
  for (Strategy s : {Strategy::NO, Strategy::C1, Strategy::C1C2,
                     Strategy::C1C2C3, Strategy::S1, Strategy::S1S2})
    CHECK(strategy_from_name(strategy_name(s)) == s);
  CHECK(!strategy_from_name("C9"));
  CHECK(strategy_rules(Strategy::NO).empty());
  CHECK(strategy_rules(Strategy::S1S2).size() == 2);
}

TEST_CASE("rule C1 matches inside a unit triangle") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  const auto match = rule_applicable(g, ShrinkRule::C1, 1);
  REQUIRE(match);
  CHECK(match->s == std::vector<Vertex>{1, 2});
  CHECK(match->witness == 3);
}

TEST_CASE("rule C2 matches where C1 does not") {
  SupportGraph g = SupportGraph::from_point(fixtures::p5());
  CHECK(!rule_applicable(g, ShrinkRule::C1, 3));
  const auto match = rule_applicable(g, ShrinkRule::C2, 3);
  REQUIRE(match);
  CHECK(match->s == std::vector<Vertex>{3, 4});
  CHECK(match->witness == 2);
}

TEST_CASE("rule C3 matches the fractional triangle") {
  SupportGraph g = SupportGraph::from_point(fixtures::c3f());
  CHECK(!rule_applicable(g, ShrinkRule::C1, 1));
  CHECK(!rule_applicable(g, ShrinkRule::C2, 1));
  const auto match = rule_applicable(g, ShrinkRule::C3, 1);
  REQUIRE(match);
  CHECK(match->s == std::vector<Vertex>{1, 2, 3});
  CHECK(match->witness == 7);
}

TEST_CASE("rule S1 needs a third heavy vertex") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  const auto match = rule_applicable(g, ShrinkRule::S1, 1);
  REQUIRE(match);
  CHECK(match->s == std::vector<Vertex>{1, 2});

  // On the two-vertex support no witness vertex exists.
  SupportGraph tiny = SupportGraph::from_point(fixtures::k2());
  CHECK(!rule_applicable(tiny, ShrinkRule::S1, 1));
}

TEST_CASE("rule S2 fires only on violated logical constraints") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  CHECK(!rule_applicable(g, ShrinkRule::S2, 3));
  g.contract({1, 2});  // the merged edge to 3 now carries weight 2
  const auto match = rule_applicable(g, ShrinkRule::S2, 3);
  REQUIRE(match);
  CHECK(match->s == std::vector<Vertex>{3, 7});
}

TEST_CASE("shrink_update saves the violated neighbourhood candidate") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  QRepository repo = make_repo(g);
  const Vertex s = shrink_update(g, {1, 2}, repo);
  CHECK(s == 7);
  REQUIRE(repo.size() == 1);
  CHECK(repo.entries()[0].q == std::vector<Vertex>{1, 2, 3});
  CHECK(repo.entries()[0].slack == doctest::Approx(-2.0));
  // The merged vertex pops first from the heap.
  CHECK(g.heap_pop() == s);
  CHECK(g.heap_pop() == 3);
}

TEST_CASE("shrink_update without a logical violation saves nothing") {
  SupportGraph g = SupportGraph::from_point(fixtures::c6());
  QRepository repo = make_repo(g);
  shrink_update(g, {1, 2}, repo);
  CHECK(repo.empty());
}

TEST_CASE("shrink_update respects the m gate on witnesses") {
  // In F1 the logical constraint at the merged vertex is violated, but no
  // third vertex carries m close to 1, so nothing can be saved.
  SupportGraph g = SupportGraph::from_point(fixtures::f1());
  QRepository repo = make_repo(g);
  shrink_update(g, {1, 2}, repo);
  CHECK(repo.empty());
}

TEST_CASE("T2 under S1S2 collapses to two isolated vertices") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SupportGraph g = SupportGraph::from_point(fixtures::t2());
    QRepository repo = make_repo(g);
    Rng rng(seed);
    const ShrinkReport rep = run_strategy(g, Strategy::S1S2, repo, rng);
    CHECK(rep.final_vertices == 2);
    CHECK(rep.final_edges == 0);
    CHECK(rep.counts.s1 == 2);
    CHECK(rep.counts.s2 == 2);
    CHECK(rep.counts.c1 == 0);
    CHECK(rep.q_found == 1);
    CHECK(repo_sets(repo) ==
          std::vector<std::vector<Vertex>>{{1, 2, 3}});
  }
}

TEST_CASE("F1 under S1S2 collapses completely without Q sets") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SupportGraph g = SupportGraph::from_point(fixtures::f1());
    QRepository repo = make_repo(g);
    Rng rng(seed);
    const ShrinkReport rep = run_strategy(g, Strategy::S1S2, repo, rng);
    CHECK(rep.final_vertices == 1);
    CHECK(rep.final_edges == 0);
    CHECK(rep.counts.s1 == 3);
    CHECK(rep.counts.s2 == 2);
    CHECK(repo.empty());
  }
}

TEST_CASE("C6 under C1 folds the ring to a single heavy edge") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SupportGraph g = SupportGraph::from_point(fixtures::c6());
    QRepository repo = make_repo(g);
    Rng rng(seed);
    const ShrinkReport rep = run_strategy(g, Strategy::C1, repo, rng);
    CHECK(rep.final_vertices == 2);
    CHECK(rep.final_edges == 1);
    CHECK(rep.counts.c1 == 4);
    CHECK(repo.empty());
  }
}

TEST_CASE("C3F needs rule C3 to contract") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    SupportGraph g = SupportGraph::from_point(fixtures::c3f());
    QRepository repo = make_repo(g);
    Rng rng(seed);

    const ShrinkReport rep = run_strategy(g, Strategy::C1C2C3, repo, rng);
    CHECK(rep.counts.c3 == 2);
    CHECK(rep.counts.c1 == 1);
    CHECK(rep.counts.c2 == 0);
    CHECK(rep.final_vertices == 2);
    CHECK(rep.final_edges == 1);

    // Without C3 the graph is untouched.
    SupportGraph g2 = SupportGraph::from_point(fixtures::c3f());
    QRepository repo2 = make_repo(g2);
    Rng rng2(seed);
    const ShrinkReport rep2 = run_strategy(g2, Strategy::C1C2, repo2, rng2);
    CHECK(rep2.counts.total() == 0);
    CHECK(rep2.final_vertices == 7);
  }
}

TEST_CASE("NO strategy leaves the graph alone") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  QRepository repo = make_repo(g);
  Rng rng(0);
  const ShrinkReport rep = run_strategy(g, Strategy::NO, repo, rng);
  CHECK(rep.final_vertices == 6);
  CHECK(rep.final_edges == 6);
  CHECK(rep.counts.total() == 0);
}

TEST_CASE("merged vertices inherit the preimage maximum of y") {
  SupportGraph g = SupportGraph::from_point(fixtures::f1());
  QRepository repo = make_repo(g);
  const Vertex s = shrink_update(g, {4, 5}, repo);
  CHECK(g.m(s) == doctest::Approx(0.5));
  const Vertex s2 = shrink_update(g, {s, 3}, repo);
  CHECK(g.m(s2) == doctest::Approx(1.0));
}

TEST_CASE("safe rules preserve violation existence on random instances") {
  // Corollary-1 strategies: a violated SEC exists on the original point
  // exactly when one exists on the shrunk graph under the m-inequality.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SyntheticParams params{9 + static_cast<int>(seed % 4),
                           1 + static_cast<int>(seed % 3), 2, 0.2, seed};
    const FractionalPoint p = generate_synthetic(params);
    const bool violated_before =
        oracle_enumerate(p).max_violation > kViolationTol;

    for (Strategy strat : {Strategy::C1, Strategy::C1C2, Strategy::C1C2C3,
                           Strategy::S1}) {
      SupportGraph g = SupportGraph::from_point(p);
      QRepository repo = make_repo(g);
      Rng rng(seed * 31 + 1);
      run_strategy(g, strat, repo, rng);
      const bool violated_after =
          g.live_vertex_count() >= 4 &&
          oracle_enumerate_m(g).max_violation > kViolationTol;
      CHECK(violated_before == violated_after);
    }
  }
}

TEST_CASE("S1S2 keeps violations recoverable") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    SyntheticParams params{9, 1 + static_cast<int>(seed % 3), 2, 0.2, seed};
    const FractionalPoint p = generate_synthetic(params);
    if (oracle_enumerate(p).max_violation <= kViolationTol) continue;

    SupportGraph g = SupportGraph::from_point(p);
    QRepository repo = make_repo(g);
    Rng rng(seed);
    run_strategy(g, Strategy::S1S2, repo, rng);
    const bool shrunk_violated =
        g.live_vertex_count() >= 4 &&
        oracle_enumerate_m(g).max_violation > kViolationTol;
    CHECK((shrunk_violated || !repo.empty()));
  }
}

TEST_CASE("every saved Q is violated on the original point") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SyntheticParams params{10, 2, 2, 0.3, seed};
    const FractionalPoint p = generate_synthetic(params);
    SupportGraph g = SupportGraph::from_point(p);
    QRepository repo = make_repo(g);
    Rng rng(seed);
    run_strategy(g, Strategy::S1S2, repo, rng);

    for (const auto& entry : repo.entries()) {
      const std::set<Vertex> q(entry.q.begin(), entry.q.end());
      Vertex u = entry.q.front();
      for (Vertex v : entry.q)
        if (p.y_of(v) > p.y_of(u)) u = v;
      Vertex w = 0;
      for (Vertex v : repo.universe())
        if (!q.count(v) && (w == 0 || p.y_of(v) > p.y_of(w))) w = v;
      REQUIRE(w != 0);
      CHECK(sec_slack(p, q, u, w) < -kViolationTol);
    }
  }
}
