#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "plrigid/orient.hpp"
#include "support.hpp"

using namespace plrigid;
using namespace testsupport;

namespace {

int indeg_sum(const OrientationState& st) {
  int s = 0;
  for (VertexId v = 0; v < st.graph().vertex_count(); ++v) s += st.indegree(v);
  return s;
}

// circuit size must equal i nuP(C) + j nuL(C) - k + 1, every proper subset
// independent, and C - e contained in I
void check_rejection(const PointLineGraph& g, const OrientationState& st,
                     EdgeId e, const CircuitReport& rep) {
  const auto& c = rep.circuit;
  REQUIRE(!c.empty());
  CHECK(std::is_sorted(c.begin(), c.end()));
  CHECK(std::count(c.begin(), c.end(), e) == 1);
  for (EdgeId f : c)
    if (f != e) CHECK(st.contains(f));

  CountParams p = st.params();
  auto [np, nl] = g.induced_counts(c);
  CHECK(static_cast<long long>(c.size()) ==
        static_cast<long long>(p.point_cap) * np + p.line_cap * nl -
            p.deficiency + 1);
  CHECK(!count_independent(g, p, c));
  for (size_t drop = 0; drop < c.size(); ++drop) {
    std::vector<EdgeId> sub;
    for (size_t i = 0; i < c.size(); ++i)
      if (i != drop) sub.push_back(c[i]);
    CHECK(count_independent(g, p, sub));
  }
}

}  // namespace

TEST_CASE("state construction validates params") {
  PointLineGraph g = PointLineGraph::parse("point u1\nline v1\nedge u1 v1\n");
  CHECK_NOTHROW(OrientationState(g, kRigidCounts));
  CHECK_NOTHROW(OrientationState(g, kLineCounts));
  CHECK_NOTHROW(OrientationState(g, kFrameCounts));
  CHECK_THROWS_AS(OrientationState(g, CountParams{2, 1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(OrientationState(g, CountParams{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(OrientationState(g, CountParams{2, 1, -1}), std::invalid_argument);
  OrientationState st(g, kRigidCounts);
  CHECK(st.size() == 0);
  CHECK(st.members().empty());
}

TEST_CASE("single-edge dependencies short-circuit") {
  PointLineGraph g = PointLineGraph::parse(
      "point u1\npoint u2\nline v1\nline v2\nedge u1 u2\nedge v1 v2\n");

  OrientationState rigid(g, kRigidCounts);
  auto rej = rigid.try_insert(1);  // LL edge: 1 > 2*0 + 1*2 - 2
  REQUIRE(rej.has_value());
  CHECK(rej->circuit == std::vector<EdgeId>{1});
  CHECK(rej->reachable == std::vector<VertexId>{2, 3});
  CHECK(rigid.size() == 0);
  CHECK(!rigid.try_insert(0).has_value());  // PP fine here

  OrientationState lines(g, kLineCounts);
  auto rej2 = lines.try_insert(0);  // PP edge: 1 > 0
  REQUIRE(rej2.has_value());
  CHECK(rej2->circuit == std::vector<EdgeId>{0});
  CHECK(!lines.try_insert(1).has_value());  // LL fine here
  CHECK(indeg_sum(lines) == lines.size());
}

TEST_CASE("K4 fills up and the parallel copy closes the full circuit") {
  PointLineGraph g = PointLineGraph::load(fixture("k4_points.txt"));
  EdgeId copy = g.append_parallel_copy(0);
  OrientationState st(g, kRigidCounts);
  for (EdgeId e = 0; e < 6; ++e) CHECK(!st.try_insert(e).has_value());
  CHECK(st.size() == 6);
  CHECK(indeg_sum(st) == 6);

  auto rej = st.try_insert(copy);
  REQUIRE(rej.has_value());
  CHECK(rej->circuit.size() == 7);  // all six originals plus the copy
  check_rejection(g, st, copy, *rej);
  CHECK(st.size() == 6);
  CHECK(indeg_sum(st) == 6);

  // remove one edge, the copy then fits; reinsert round-trips
  st.remove(3);
  CHECK(!st.try_insert(copy).has_value());
  st.remove(copy);
  CHECK(!st.try_insert(3).has_value());
  CHECK(st.size() == 6);
}

TEST_CASE("line-count matroid on the triangle") {
  PointLineGraph g = PointLineGraph::load(fixture("line_triangle.txt"));
  EdgeId copy = g.append_parallel_copy(0);
  OrientationState st(g, kLineCounts);
  // the two-edge path, then the closing edge: 3 <= nuL = 3 still independent
  CHECK(!st.try_insert(0).has_value());
  CHECK(!st.try_insert(1).has_value());
  CHECK(!st.try_insert(2).has_value());
  auto rej = st.try_insert(copy);
  REQUIRE(rej.has_value());
  CHECK(rej->circuit.size() == 4);  // 1*3 - 0 + 1
  check_rejection(g, st, copy, *rej);
}

TEST_CASE("remove keeps the remaining heads, reinsertion allowed") {
  PointLineGraph g = PointLineGraph::load(fixture("k4_points.txt"));
  OrientationState st(g, kRigidCounts);
  for (EdgeId e = 0; e < 6; ++e) st.try_insert(e);

  std::vector<VertexId> heads_before;
  for (EdgeId e = 0; e < 6; ++e) heads_before.push_back(st.head(e));
  st.remove(2);
  CHECK(st.size() == 5);
  CHECK(!st.contains(2));
  CHECK(st.head(2) == -1);
  for (EdgeId e = 0; e < 6; ++e)
    if (e != 2) CHECK(st.head(e) == heads_before[e]);
  CHECK_THROWS_AS(st.remove(2), std::invalid_argument);
  CHECK_THROWS_AS(st.try_insert(0), std::invalid_argument);  // already a member
  CHECK(!st.try_insert(2).has_value());
}

TEST_CASE("probe never changes the state") {
  PointLineGraph g = PointLineGraph::load(fixture("k4_points.txt"));
  EdgeId copy = g.append_parallel_copy(5);
  OrientationState st(g, kRigidCounts);
  for (EdgeId e = 0; e < 5; ++e) st.try_insert(e);

  auto snapshot_of = [&] {
    std::vector<std::pair<EdgeId, VertexId>> s;
    for (EdgeId e : st.members()) s.push_back({e, st.head(e)});
    return s;
  };
  auto before = snapshot_of();
  CHECK(!st.probe(5).has_value());  // would be accepted
  CHECK(snapshot_of() == before);
  st.try_insert(5);
  auto full = snapshot_of();
  auto rej = st.probe(copy);
  REQUIRE(rej.has_value());
  CHECK(snapshot_of() == full);

  CHECK(rej->circuit == st.fundamental_circuit(copy).circuit);
  CHECK(snapshot_of() == full);
}

TEST_CASE("fundamental_circuit requires dependence") {
  PointLineGraph g = PointLineGraph::load(fixture("pp_edge.txt"));
  OrientationState st(g, kRigidCounts);
  CHECK_THROWS_AS(st.fundamental_circuit(0), std::invalid_argument);
}

TEST_CASE("oracle equivalence on random graphs") {
  int rejections = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    PointLineGraph g = random_mixed_graph(seed, 8);
    for (CountParams p : {kRigidCounts, kLineCounts, kFrameCounts}) {
      OrientationState st(g, p);
      std::vector<EdgeId> members;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::vector<EdgeId> with = members;
        with.push_back(e);
        bool expect = count_independent(g, p, with);
        auto rej = st.try_insert(e);
        CHECK(rej.has_value() == !expect);
        if (rej) {
          ++rejections;
          check_rejection(g, st, e, *rej);
        } else {
          members.push_back(e);
        }
        CHECK(indeg_sum(st) == st.size());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
          CHECK(st.indegree(v) <= st.capacity(v));
      }
      CHECK(st.members() == members);
    }
  }
  CHECK(rejections > 50);
}

TEST_CASE("insertion order does not change the greedy size") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    PointLineGraph g = random_mixed_graph(seed, 5);
    for (CountParams p : {kRigidCounts, kLineCounts}) {
      std::vector<EdgeId> order = g.all_edges();
      int baseline = -1;
      std::sort(order.begin(), order.end());
      do {
        OrientationState st(g, p);
        for (EdgeId e : order) st.try_insert(e);
        if (baseline < 0) baseline = st.size();
        CHECK(st.size() == baseline);
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
}

TEST_CASE("runs are deterministic") {
  PointLineGraph g = random_mixed_graph(42, 8);
  auto run = [&] {
    OrientationState st(g, kRigidCounts);
    for (EdgeId e = 0; e < g.edge_count(); ++e) st.try_insert(e);
    std::vector<std::pair<EdgeId, VertexId>> s;
    for (EdgeId e : st.members()) s.push_back({e, st.head(e)});
    return s;
  };
  CHECK(run() == run());
}

TEST_CASE("greedy whole-set rank helper") {
  PointLineGraph g = PointLineGraph::load(fixture("k4_points.txt"));
  CHECK(count_matroid_rank(g, kRigidCounts) == 6);
  CHECK(count_matroid_rank(g, kLineCounts) == 0);
  PointLineGraph t = PointLineGraph::load(fixture("line_triangle.txt"));
  CHECK(count_matroid_rank(t, kLineCounts) == 3);
  CHECK(count_matroid_rank(t, kRigidCounts) == 0);  // LL edges are loops there
}
