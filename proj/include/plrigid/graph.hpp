#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plrigid {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

enum class VertexKind : std::uint8_t { Point, Line };
enum class EdgeClass : std::uint8_t { PP, PL, LL };

struct Edge {
  VertexId u = -1;
  VertexId v = -1;
  // Shared by parallel copies; equals the id of the first edge of the group.
  EdgeId parallel_group = -1;
};

// Graph with point- and line-vertices. Input files must describe simple
// graphs (no loops, no parallel edges); parallel edges exist only through
// append_parallel_copy / add_parallel_copy, which the rank engine uses for
// its reversible doubling step. Treat instances as immutable once built and
// shared; the mutators are for construction and for that doubling.
class PointLineGraph {
 public:
  PointLineGraph() = default;

  // name may be empty, in which case u<k>/v<k> is assigned.
  VertexId add_vertex(VertexKind kind, std::string name = {});
  // Rejects loops and duplicate pairs.
  EdgeId add_edge(VertexId a, VertexId b);

  // Text format, one directive per line:
  //   # comment
  //   point <name>
  //   line <name>
  //   edge <name> <name>
  // Names match [A-Za-z_][A-Za-z0-9_]*. Throws ParseError.
  static PointLineGraph parse(std::string_view text);
  // JSON mirror: {"points": [...], "lines": [...], "edges": [[a, b], ...]}.
  static PointLineGraph parse_json(std::string_view text);
  // Reads a file, dispatching on a ".json" suffix.
  static PointLineGraph load(const std::string& path);

  // Canonical text form; parse(serialize()) reproduces the graph exactly
  // (vertex order, edge order, names).
  std::string serialize() const;

  int vertex_count() const { return static_cast<int>(kinds_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int point_count() const { return points_; }
  int line_count() const { return lines_; }

  VertexKind kind(VertexId v) const { return kinds_[v]; }
  const std::string& name(VertexId v) const { return names_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  EdgeClass edge_class(EdgeId e) const;
  VertexId other_end(EdgeId e, VertexId v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
  }

  // (#point-vertices, #line-vertices) incident to the given edges.
  std::pair<int, int> induced_counts(std::span<const EdgeId> edges) const;

  std::vector<EdgeId> all_edges() const;

  bool naturally_bipartite() const;  // every edge is PL

  // Copy of the graph with one extra parallel copy of e appended; the copy's
  // id is the old edge_count(). The original is untouched.
  std::pair<PointLineGraph, EdgeId> add_parallel_copy(EdgeId e) const;
  // In-place variant; undo with pop_edge(). Ids of existing edges are stable.
  EdgeId append_parallel_copy(EdgeId e);
  void pop_edge();

 private:
  std::vector<VertexKind> kinds_;
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  int points_ = 0;
  int lines_ = 0;
};

// Graphviz export; point-vertices drawn filled, line-vertices as open circles.
std::string to_dot(const PointLineGraph& g);

}  // namespace plrigid
