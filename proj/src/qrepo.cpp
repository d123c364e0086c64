#include "cycsec/qrepo.hpp"

#include <algorithm>

namespace cycsec {

std::vector<Vertex> canonical_q(const std::vector<Vertex>& universe,
                                const std::set<Vertex>& side) {
  std::vector<Vertex> in, out;
  for (Vertex v : universe) {
    if (side.count(v))
      in.push_back(v);
    else
      out.push_back(v);
  }
  if (in.size() < out.size()) return in;
  if (out.size() < in.size()) return out;
  if (in.empty()) return in;
  return in.front() < out.front() ? in : out;
}

bool QRepository::add(const std::set<Vertex>& side, double slack) {
  std::vector<Vertex> q = canonical_q(universe_, side);
  if (q.size() < 2 || q.size() + 2 > universe_.size()) return false;
  auto [it, fresh] = index_.try_emplace(q, entries_.size());
  if (fresh) {
    entries_.push_back({std::move(q), slack});
    return true;
  }
  entries_[it->second].slack = std::min(entries_[it->second].slack, slack);
  return false;
}

}  // namespace cycsec
