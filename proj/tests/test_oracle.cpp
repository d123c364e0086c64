#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "cycsec/instance_io.hpp"
#include "cycsec/oracle.hpp"
#include "cycsec/shrink.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cycsec;

namespace {

std::vector<std::vector<Vertex>> sorted_sets(
    std::vector<std::vector<Vertex>> sets) {
  std::sort(sets.begin(), sets.end());
  return sets;
}

}  // namespace

TEST_CASE("both oracles certify the split pair of triangles") {
  const FractionalPoint p = fixtures::t2();
  for (const OracleResult& truth :
       {oracle_pairwise(p), oracle_enumerate(p)}) {
    CHECK(truth.max_violation == doctest::Approx(2.0));
    REQUIRE(truth.witness);
    CHECK(truth.witness->slack == doctest::Approx(-2.0));
    CHECK(truth.all_violated_q ==
          std::vector<std::vector<Vertex>>{{1, 2, 3}});
  }
}

TEST_CASE("feasible fixtures have no witness") {
  for (const auto& p : {fixtures::c6(), fixtures::f1()}) {
    for (const OracleResult& truth :
         {oracle_pairwise(p), oracle_enumerate(p)}) {
      CHECK(truth.max_violation == 0.0);
      CHECK(!truth.witness);
      CHECK(truth.all_violated_q.empty());
    }
  }
}

TEST_CASE("witness attains the reported maximum") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const FractionalPoint p =
        generate_synthetic({10, 1 + static_cast<int>(seed % 3), 2, 0.3, seed});
    const OracleResult truth = oracle_enumerate(p);
    if (!truth.witness) continue;
    CHECK(-truth.witness->slack == doctest::Approx(truth.max_violation));
    const std::set<Vertex> q(truth.witness->q.begin(),
                             truth.witness->q.end());
    CHECK(sec_slack(p, q, truth.witness->u, truth.witness->v) ==
          doctest::Approx(truth.witness->slack));
  }
}

TEST_CASE("pairwise and enumeration agree on random instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const FractionalPoint p = generate_synthetic(
        {9 + static_cast<int>(seed % 5), 1 + static_cast<int>(seed % 3), 2,
         0.25, seed});
    const OracleResult a = oracle_pairwise(p);
    const OracleResult b = oracle_enumerate(p);
    CHECK(a.max_violation == doctest::Approx(b.max_violation));
    // The pairwise oracle reports min-cut sides only, a subset of the full
    // enumeration; the sets agree on existence.
    const auto all = sorted_sets(b.all_violated_q);
    for (const auto& q : a.all_violated_q)
      CHECK(std::binary_search(all.begin(), all.end(), q));
    CHECK(a.all_violated_q.empty() == b.all_violated_q.empty());
  }
}

TEST_CASE("enumeration refuses oversized supports") {
  const FractionalPoint p = generate_synthetic({17, 1, 2, 0.2, 0});
  CHECK_THROWS_AS(oracle_enumerate(p), std::length_error);
}

TEST_CASE("m-oracle matches the plain oracle on unshrunk graphs") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FractionalPoint p = generate_synthetic({9, 2, 2, 0.2, seed});
    SupportGraph g = SupportGraph::from_point(p);
    const OracleResult a = oracle_enumerate(p);
    const OracleResult b = oracle_enumerate_m(g);
    CHECK(a.max_violation == doctest::Approx(b.max_violation));
  }
}

TEST_CASE("m-oracle sees violations through contractions") {
  SupportGraph g = SupportGraph::from_point(fixtures::t2());
  g.contract({1, 2});
  g.contract({4, 5});
  const OracleResult truth = oracle_enumerate_m(g);
  CHECK(truth.max_violation == doctest::Approx(2.0));
  REQUIRE(truth.witness);
  // The reported side expands to one of the two original triangles.
  const auto expanded = g.expand(
      std::set<Vertex>(truth.witness->q.begin(), truth.witness->q.end()));
  const bool triangle = expanded == std::vector<Vertex>{1, 2, 3} ||
                        expanded == std::vector<Vertex>{4, 5, 6};
  CHECK(triangle);
}
