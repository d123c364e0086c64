#pragma once

#include <map>
#include <set>
#include <vector>

#include "cycsec/types.hpp"

namespace cycsec {

/// Canonical form of a cut side within the support universe: the smaller of
/// Q and universe - Q, ties broken towards the side holding the smallest id.
std::vector<Vertex> canonical_q(const std::vector<Vertex>& universe,
                                const std::set<Vertex>& side);

/// Deduplicated store of canonical Q sets in insertion order, each with the
/// best (most negative) slack seen so far.
class QRepository {
 public:
  explicit QRepository(std::vector<Vertex> universe)
      : universe_(std::move(universe)) {}

  struct Entry {
    std::vector<Vertex> q;
    double slack;
  };

  /// Canonicalizes and stores; rejects sides violating 2 <= |Q| <= |U|-2.
  /// Returns true when a new set was added.
  bool add(const std::set<Vertex>& side, double slack);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::vector<Vertex>& universe() const { return universe_; }

 private:
  std::vector<Vertex> universe_;
  std::vector<Entry> entries_;
  std::map<std::vector<Vertex>, std::size_t> index_;
};

}  // namespace cycsec
