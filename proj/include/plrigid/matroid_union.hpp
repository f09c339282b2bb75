#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plrigid/orient.hpp"

namespace plrigid {

// Independent-set certificate for the union of the two count matroids with
// params kRigidCounts (part T) and kLineCounts (part S): an edge set is
// independent in the union exactly when it splits into a T-independent and an
// S-independent part, and that split is what this class maintains. Growth is
// by breadth-first augmenting paths over fundamental circuits; a blocked
// augment proves dependence and leaves the certificate untouched.
class UnionCertificate {
 public:
  explicit UnionCertificate(const PointLineGraph& g);
  UnionCertificate(const UnionCertificate&) = delete;
  UnionCertificate& operator=(const UnionCertificate&) = delete;

  struct Snapshot {
    std::uint64_t owner = 0;
    OrientationState t, s;
  };
  Snapshot snapshot() const;
  // Restores a snapshot taken from this certificate; idempotent. Throws on a
  // snapshot from a different certificate.
  void rollback(const Snapshot& snap);

  struct AugmentResult {
    bool augmented = false;
    // Exchange chain e0..es: e0 = e entered parts[0], each later ei moved
    // from the other part into parts[i]. Empty when blocked.
    std::vector<EdgeId> path;
    std::vector<int> parts;  // 0 = T, 1 = S
  };
  // Tries to add e to the certified independent set. Search nodes are
  // (edge, part-to-test); e is seeded against T then S, successors of a
  // rejected node are its circuit elements (ascending id) tested against the
  // opposite part, and the first accepted node (in dequeue order) ends the
  // search. Throws if e is already a member.
  AugmentResult augment(EdgeId e);

  bool contains(EdgeId e) const { return t_.contains(e) || s_.contains(e); }
  int size() const { return t_.size() + s_.size(); }
  std::vector<EdgeId> members() const;  // ascending
  const OrientationState& part_t() const { return t_; }
  const OrientationState& part_s() const { return s_; }
  void remove(EdgeId e);  // from whichever part holds it; throws if neither

  // Two lines, "T:" and "S:", each listing member edges ascending as
  // id:tail-tail->head by vertex name.
  std::string dump() const;

  // Full consistency check (disjoint parts, in-degree bookkeeping, no LL
  // edge in T, no PP edge in S). Throws std::logic_error on violation.
  void validate() const;

  const PointLineGraph& graph() const { return t_.graph(); }

 private:
  void apply_path(const AugmentResult& res);

  std::uint64_t id_;
  OrientationState t_, s_;
  std::vector<char> visited_[2];  // scratch for augment
};

// Rank of the whole edge set in the union matroid: edges streamed in
// ascending id order through augment.
int union_rank(const PointLineGraph& g);

// Graphviz export of the certified orientation: members of T and S drawn as
// arrows toward their head (T solid, S dashed blue), non-members dotted.
std::string to_dot_oriented(const UnionCertificate& cert);

}  // namespace plrigid
