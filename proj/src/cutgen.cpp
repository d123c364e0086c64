#include "cycsec/cutgen.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cycsec {

namespace {

std::vector<Vertex> argmax_y_set(const FractionalPoint& p,
                                 const std::vector<Vertex>& group) {
  double mx = 0.0;
  for (Vertex v : group) mx = std::max(mx, p.y_of(v));
  std::vector<Vertex> out;
  for (Vertex v : group)
    if (p.y_of(v) >= mx - kEqTol) out.push_back(v);
  return out;
}

std::vector<Vertex> sample(std::vector<Vertex> pool, std::size_t k, Rng& rng) {
  if (pool.size() <= k) return pool;
  rng.shuffle(pool);
  pool.resize(k);
  return pool;
}

}  // namespace

std::vector<SEC> generate_cuts(const QRepository& repo,
                               const FractionalPoint& p, Vertex depot,
                               const CutGenPolicy& policy, Rng& rng) {
  if (policy.k_in < 1 || policy.k_out < 1)
    throw std::invalid_argument("k_in and k_out must be positive");
  const bool use_depot = policy.depot_aware && depot != 0;

  std::vector<SEC> cuts;
  for (const auto& entry : repo.entries()) {
    const std::set<Vertex> q(entry.q.begin(), entry.q.end());
    std::vector<Vertex> outside;
    for (Vertex v : repo.universe())
      if (!q.count(v)) outside.push_back(v);

    std::vector<Vertex> s_in;
    if (use_depot && q.count(depot)) {
      s_in = {depot};
    } else {
      s_in = sample(argmax_y_set(p, entry.q),
                    static_cast<std::size_t>(policy.k_in), rng);
    }

    std::set<std::pair<Vertex, Vertex>> emitted;
    for (Vertex u : s_in) {
      std::vector<Vertex> s_out;
      if (use_depot && !q.count(depot)) {
        s_out = {depot};
      } else {
        s_out = sample(argmax_y_set(p, outside),
                       static_cast<std::size_t>(policy.k_out), rng);
      }
      for (Vertex v : s_out) {
        if (!emitted.insert({u, v}).second) continue;
        const double slack = sec_slack(p, q, u, v);
        if (slack < -kViolationTol) cuts.push_back(SEC{entry.q, u, v, slack});
      }
    }
  }
  return cuts;
}

}  // namespace cycsec
