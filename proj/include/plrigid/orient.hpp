#pragma once

#include <optional>
#include <vector>

#include "plrigid/graph.hpp"

namespace plrigid {

// Parameters of the count condition |S| <= point_cap*nuP(S) + line_cap*nuL(S)
// - deficiency, valid while deficiency <= min(2*point_cap, 2*line_cap).
struct CountParams {
  int point_cap = 0;
  int line_cap = 0;
  int deficiency = 0;
};

inline constexpr CountParams kRigidCounts{2, 1, 2};  // 2nuP + nuL - 2
inline constexpr CountParams kLineCounts{0, 1, 0};   // nuL
inline constexpr CountParams kFrameCounts{2, 1, 1};  // 2nuP + nuL - 1

struct CircuitReport {
  // Unique circuit of I + e, ascending edge ids; contains e itself.
  std::vector<EdgeId> circuit;
  // Vertices from which an endpoint of e stays reachable along the kept
  // orientation when the insertion fails; the circuit is the part of I
  // induced by this set, plus e.
  std::vector<VertexId> reachable;
};

// Incremental independence oracle for one count matroid. A set I of edges is
// kept together with an orientation in which every vertex v has in-degree at
// most its capacity (point_cap or line_cap by kind). Inserting an edge first
// frees capacity at its endpoints by reversing directed paths that end there;
// if the required slack cannot be reached, I + e is dependent and the failed
// search yields the circuit.
class OrientationState {
 public:
  OrientationState(const PointLineGraph& g, CountParams params);

  // nullopt: e accepted into I (a head was assigned, possibly after path
  // reversals). Otherwise I is left unchanged and the report holds the
  // circuit of I + e. Throws if e is already a member.
  std::optional<CircuitReport> try_insert(EdgeId e);

  // Same decision as try_insert but never changes the state (reversals are
  // undone even on accept).
  std::optional<CircuitReport> probe(EdgeId e);

  // Requires I + e dependent; state is unchanged. Throws otherwise.
  CircuitReport fundamental_circuit(EdgeId e);

  void remove(EdgeId e);  // throws if e is not a member

  bool contains(EdgeId e) const {
    return e >= 0 && e < static_cast<EdgeId>(in_set_.size()) && in_set_[e];
  }
  int size() const { return size_; }
  std::vector<EdgeId> members() const;  // ascending
  VertexId head(EdgeId e) const { return contains(e) ? head_[e] : -1; }
  int indegree(VertexId v) const { return indeg_[v]; }
  int capacity(VertexId v) const {
    return g_->kind(v) == VertexKind::Point ? params_.point_cap : params_.line_cap;
  }
  const CountParams& params() const { return params_; }
  const PointLineGraph& graph() const { return *g_; }

 private:
  struct HeadChange {
    EdgeId edge;
    VertexId old_head;  // -1 marks a fresh insertion
  };

  bool attempt(EdgeId e, std::vector<HeadChange>& log, CircuitReport* rejection);
  void undo(const std::vector<HeadChange>& log);
  void ensure_edge_slot(EdgeId e);
  void build_in_adjacency();
  VertexId backward_search(VertexId w, VertexId z);

  const PointLineGraph* g_;
  CountParams params_;
  std::vector<char> in_set_;      // per edge id
  std::vector<VertexId> head_;    // per edge id, -1 when absent
  std::vector<int> indeg_;        // per vertex
  int size_ = 0;

  // scratch, reusable across calls
  std::vector<int> in_off_;
  std::vector<EdgeId> in_edges_;
  std::vector<int> visited_;
  int epoch_ = 0;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> bfs_queue_;
  std::vector<VertexId> visit_order_;
  std::vector<std::pair<VertexId, EdgeId>> cand_;
  std::vector<HeadChange> log_;
};

// Rank of the whole edge set in the count matroid: edges streamed in
// ascending id order through try_insert.
int count_matroid_rank(const PointLineGraph& g, CountParams params);

}  // namespace plrigid
