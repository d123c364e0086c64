#include <cmath>
#include <set>
#include <stdexcept>

#include "cycsec/fractional_point.hpp"
#include "cycsec/instance_io.hpp"
#include "cycsec/rng.hpp"
#include "cycsec/support_graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cycsec;

TEST_CASE("cut values on hand fixtures") {
  const auto t2 = fixtures::t2();
  CHECK(cut_value(t2, {1, 2, 3}) == doctest::Approx(0.0));
  CHECK(cut_value(t2, {1, 2}) == doctest::Approx(2.0));

  const auto c6 = fixtures::c6();
  CHECK(cut_value(c6, {1, 2, 3}) == doctest::Approx(2.0));
  CHECK(cut_value(c6, {1, 4}) == doctest::Approx(4.0));

  CHECK_THROWS_AS(cut_value(t2, {}), std::invalid_argument);
  CHECK_THROWS_AS(cut_value(t2, {1, 2, 3, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("sec slack and endpoint validation") {
  const auto t2 = fixtures::t2();
  CHECK(sec_slack(t2, {1, 2, 3}, 1, 4) == doctest::Approx(-2.0));
  CHECK(sec_slack(t2, {1, 2}, 1, 3) == doctest::Approx(0.0));
  CHECK_THROWS_AS(sec_slack(t2, {1, 2, 3}, 4, 5), std::invalid_argument);
  CHECK_THROWS_AS(sec_slack(t2, {1, 2, 3}, 1, 2), std::invalid_argument);
}

TEST_CASE("slack is symmetric under complement with swapped endpoints") {
  const auto p = fixtures::f1();
  const std::set<Vertex> q{1, 2, 3};
  const std::set<Vertex> comp{4, 5, 6};
  CHECK(sec_slack(p, q, 1, 5) == doctest::Approx(sec_slack(p, comp, 5, 1)));
}

TEST_CASE("cut identity x(delta(Q)) = 2y(Q) - 2x(gamma(Q))") {
  // Degree equations make the boundary expressible through inside weight.
  SyntheticParams params{10, 2, 2, 0.1, 42};
  const FractionalPoint p = generate_synthetic(params);
  REQUIRE(validate_point(p).empty());

  const auto supp = p.support();
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::set<Vertex> q;
    const std::size_t size = 2 + rng.next_index(supp.size() - 3);
    while (q.size() < size) q.insert(supp[rng.next_index(supp.size())]);

    double y_in = 0.0;
    for (Vertex v : q) y_in += p.y_of(v);
    double x_in = 0.0;
    for (const auto& [e, xe] : p.x)
      if (q.count(e.first) && q.count(e.second)) x_in += xe;

    CHECK(cut_value(p, q) == doctest::Approx(2.0 * y_in - 2.0 * x_in));
  }
}

TEST_CASE("validate_point flags each violation family") {
  auto p = fixtures::t2();
  CHECK(validate_point(p).empty());

  SUBCASE("degree") {
    p.y[1] = 0.9;
    const auto d = validate_point(p);
    REQUIRE(d.degree_violations.size() == 1);
    CHECK(d.degree_violations[0].first == 1);
  }
  SUBCASE("logical") {
    p.y[1] = 0.4;
    const auto d = validate_point(p);
    CHECK(!d.logical_violations.empty());
  }
  SUBCASE("bounds") {
    p.y[1] = 1.5;
    p.y[2] = 1.5;  // keep edge (1,2) logically satisfied
    const auto d = validate_point(p);
    CHECK(!d.bound_violations.empty());
  }
}

TEST_CASE("support graph mirrors the point") {
  const auto p = fixtures::t2();
  SupportGraph g = SupportGraph::from_point(p);
  CHECK(g.live_vertex_count() == 6);
  CHECK(g.live_edge_count() == 6);
  CHECK(g.y(1) == doctest::Approx(1.0));
  CHECK(g.m(1) == doctest::Approx(1.0));
  CHECK(g.x(1, 2) == doctest::Approx(1.0));
  CHECK(g.x(1, 4) == doctest::Approx(0.0));
  CHECK(g.degree(1) == doctest::Approx(2.0));
  CHECK(g.cut_value({1, 2, 3}) == doctest::Approx(0.0));
  CHECK(g.m_slack({1, 2, 3}, 1, 4) == doctest::Approx(-2.0));
  CHECK(g.support_universe() == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("edges into zero-y vertices are rejected") {
  FractionalPoint p;
  p.n_vertices = 3;
  p.set_y(1, 0.5);
  p.set_y(2, 0.5);
  p.add_x(1, 3, 0.5);
  CHECK_THROWS_AS(SupportGraph::from_point(p), std::invalid_argument);
}

TEST_CASE("contraction mints fresh ids and reweights") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  const Vertex s = g.contract({1, 2});
  CHECK(s == 7);
  CHECK(g.live_vertex_count() == 5);
  CHECK_FALSE(g.alive(1));
  CHECK_FALSE(g.alive(2));
  CHECK(g.y(s) == doctest::Approx(1.0));  // boundary x13 + x23 halved
  CHECK(g.m(s) == doctest::Approx(1.0));
  CHECK(g.x(s, 3) == doctest::Approx(2.0));  // parallel edges merged
  CHECK(g.preimage(s) == std::vector<Vertex>{1, 2});
  CHECK(g.expand({s, 3}) == std::vector<Vertex>{1, 2, 3});

  // Contracted vertices satisfy the degree identity by construction.
  CHECK(g.degree(s) == doctest::Approx(2.0 * g.y(s)));

  const Vertex s2 = g.contract({s, 3});
  CHECK(s2 == 8);
  CHECK(g.y(s2) == doctest::Approx(0.0));
  CHECK(g.m(s2) == doctest::Approx(1.0));
  CHECK(g.expand({s2}) == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(g.cut_value({s2, 4, 5, 6}), std::invalid_argument);
}

TEST_CASE("degree identity survives arbitrary contractions") {
  SyntheticParams params{12, 2, 3, 0.2, 11};
  SupportGraph g = SupportGraph::from_point(generate_synthetic(params));
  Rng rng(3);
  while (g.live_vertex_count() > 2) {
    auto live = g.live_vertices();
    rng.shuffle(live);
    const Vertex s = g.contract({live[0], live[1]});
    CHECK(g.degree(s) == doctest::Approx(2.0 * g.y(s)));
  }
}

TEST_CASE("m-slack equals point slack while uncontracted") {
  const auto p = fixtures::f1();
  SupportGraph g = SupportGraph::from_point(p);
  const std::set<Vertex> q{4, 5, 6};
  CHECK(g.m_slack(q, 4, 1) == doctest::Approx(sec_slack(p, q, 4, 1)));
}

TEST_CASE("heap is LIFO with lazy deletion") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  g.heap_push(1);
  g.heap_push(2);
  g.heap_push(2);  // duplicate push is absorbed
  CHECK(g.heap_pop() == 2);
  CHECK(g.heap_pop() == 1);
  CHECK(g.heap_pop() == 0);

  g.heap_push(3);
  g.heap_push(4);
  g.contract({3, 4});  // both die while queued
  CHECK(g.heap_empty());
  CHECK(g.heap_pop() == 0);
}

TEST_CASE("as_point round trips the live graph") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  g.contract({1, 2});
  const FractionalPoint p = g.as_point();
  CHECK(p.y_of(7) == doctest::Approx(1.0));
  CHECK(p.x_of(7, 3) == doctest::Approx(2.0));
  CHECK(p.y.size() == 5);
}
