// Shared helpers for the test binaries: brute-force oracles that avoid the
// orientation/augmentation machinery entirely, plus small random-graph
// generators. The oracles are the reference the engine is checked against,
// so they must stay dumb: plain subset enumeration over the counting
// definitions.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "plrigid/generate.hpp"
#include "plrigid/graph.hpp"
#include "plrigid/orient.hpp"

namespace testsupport {

using namespace plrigid;

inline std::string fixture(const std::string& name) {
  return std::string(PLRIGID_FIXTURES_DIR) + "/" + name;
}

// |S| <= i nuP(S) + j nuL(S) - k for this exact edge set (no subsets).
inline bool count_holds(const PointLineGraph& g, CountParams p,
                        const std::vector<EdgeId>& edges) {
  auto [np, nl] = g.induced_counts(edges);
  long long bound = static_cast<long long>(p.point_cap) * np +
                    static_cast<long long>(p.line_cap) * nl - p.deficiency;
  return static_cast<long long>(edges.size()) <= bound;
}

// Independence in the count matroid by checking every nonempty subset.
inline bool count_independent(const PointLineGraph& g, CountParams p,
                              const std::vector<EdgeId>& edges) {
  const int n = static_cast<int>(edges.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<EdgeId> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(edges[i]);
    if (!count_holds(g, p, sub)) return false;
  }
  return true;
}

// Per-subset tables over a ground set of up to ~16 edges: independence and
// rank of every submask, by definition.
struct SubsetTables {
  std::vector<char> independent;
  std::vector<int> rank;
};

inline SubsetTables subset_tables(const PointLineGraph& g, CountParams p,
                                  const std::vector<EdgeId>& ground) {
  const int n = static_cast<int>(ground.size());
  SubsetTables t;
  t.independent.assign(1u << n, 1);
  t.rank.assign(1u << n, 0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<EdgeId> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(ground[i]);
    bool indep = count_holds(g, p, sub);
    for (int i = 0; indep && i < n; ++i)
      if (mask & (1u << i)) indep = t.independent[mask & ~(1u << i)];
    t.independent[mask] = indep;
    if (indep) {
      t.rank[mask] = static_cast<int>(sub.size());
    } else {
      int best = 0;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) best = std::max(best, t.rank[mask & ~(1u << i)]);
      t.rank[mask] = best;
    }
  }
  return t;
}

// Rank of the whole ground set in the union of the two matroids, via
// min over B of r1(B) + r2(B) + |ground \ B|.
inline int union_rank_bruteforce(const PointLineGraph& g,
                                 const std::vector<EdgeId>& ground) {
  const int n = static_cast<int>(ground.size());
  SubsetTables t1 = subset_tables(g, kRigidCounts, ground);
  SubsetTables t2 = subset_tables(g, kLineCounts, ground);
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int outside = n - __builtin_popcount(mask);
    best = std::min(best, t1.rank[mask] + t2.rank[mask] + outside);
  }
  return best;
}

// Random graph with a mixed point/line split, at most max_edges edges.
// Always at least one edge.
inline PointLineGraph random_mixed_graph(std::uint64_t seed, int max_edges) {
  std::mt19937_64 rng(seed);
  for (;;) {
    int points = static_cast<int>(rng() % 5);
    int lines = static_cast<int>(rng() % 5);
    long long n = points + lines;
    long long cap = n * (n - 1) / 2;
    if (cap < 1) continue;
    int edges = 1 + static_cast<int>(rng() % std::min<long long>(cap, max_edges));
    return random_graph(points, lines, edges, rng());
  }
}

}  // namespace testsupport
