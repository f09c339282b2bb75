#pragma once

#include <span>
#include <vector>

#include "plrigid/matroid_union.hpp"

namespace plrigid {

// Incremental independence in the generic point-line rigidity matroid. An
// edge e is independent of the accepted set exactly when the accepted set
// plus e plus a temporary parallel copy of e fits into the union certificate;
// the copy is appended, tested and dropped again per call, so between calls
// the working graph equals the input graph.
class RigidityState {
 public:
  explicit RigidityState(const PointLineGraph& g);
  RigidityState(const RigidityState&) = delete;
  RigidityState& operator=(const RigidityState&) = delete;

  enum class Outcome { Independent, Dependent };

  // Dependent leaves every piece of state untouched. Throws if e was already
  // accepted or is out of range.
  Outcome test_and_add(EdgeId e);

  // Requires a preceding test_and_add(e) == Dependent (checked by a fresh
  // rank run). Returns the unique circuit inside accepted + e by dropping
  // every removable edge in ascending id order.
  std::vector<EdgeId> circuit(EdgeId e) const;

  const std::vector<EdgeId>& accepted() const { return accepted_; }
  const UnionCertificate& certificate() const { return cert_; }
  const PointLineGraph& graph() const { return work_; }

 private:
  PointLineGraph work_;
  UnionCertificate cert_;
  std::vector<EdgeId> accepted_;
  std::vector<char> accepted_mask_;
};

// Rank of the whole edge set, edges streamed in input (id) order.
int rank(const PointLineGraph& g);
// Rank of an edge subset (streamed ascending; duplicates ignored).
int rank_of(const PointLineGraph& g, std::span<const EdgeId> subset);
// Graphs with at most one vertex count as rigid; otherwise rank == 2|V| - 3.
bool is_rigid(const PointLineGraph& g);

struct PartitionValue {
  std::vector<std::vector<EdgeId>> parts;  // a minimizing partition
  long long value = 0;
};

// Independent check of the rank by exhaustive minimization over all set
// partitions {A_i} of A:
//   nuL(A) + min_partition [ sum_i (2 nuP(A_i) + nuL(A_i) - 2) - c_L ]
// where c_L counts the components of the part-adjacency graph (parts
// adjacent when sharing a line-vertex; all-point parts isolated). Ties go to
// the first partition in enumeration order. Throws LimitError above `limit`
// edges (Bell-number growth).
PartitionValue rank_formula_best_partition(const PointLineGraph& g,
                                           std::span<const EdgeId> edges,
                                           int limit = 10);
long long rank_formula_oracle(const PointLineGraph& g,
                              std::span<const EdgeId> edges, int limit = 10);

// c_L of an explicit partition; parts must be nonempty and pairwise disjoint.
int components_sharing_lines(const PointLineGraph& g,
                             const std::vector<std::vector<EdgeId>>& parts);

// Necessary counting conditions on every nonempty subset:
//   |S'| <= 2 nu(S') - 3, and |S'| <= nuL(S') - 1 when S' spans no point.
// One-sided: passing does not imply independence. Throws LimitError above
// `limit` edges.
bool satisfies_necessary_counts(const PointLineGraph& g,
                                std::span<const EdgeId> edges, int limit = 16);

// Point-only specialization of the partition minimum, where every part of a
// partition is its own component: min over partitions of sum (2 nuP(A_i) - 3).
// Requires every edge to be PP.
long long lovasz_yemini_value(const PointLineGraph& g,
                              std::span<const EdgeId> edges, int limit = 10);

}  // namespace plrigid
