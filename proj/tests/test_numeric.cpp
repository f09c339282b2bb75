#include <cmath>
#include <set>

#include "doctest.h"
#include "plrigid/matroid_union.hpp"
#include "plrigid/numeric.hpp"
#include "plrigid/orient.hpp"
#include "support.hpp"

using namespace plrigid;
using namespace testsupport;

namespace {

Realization make_realization(std::initializer_list<std::pair<int, int>> pts) {
  Realization p;
  for (auto [a, b] : pts) p.coords.emplace_back(a, b);
  return p;
}

}  // namespace

TEST_CASE("random realizations are deterministic and distinct") {
  PointLineGraph g = PointLineGraph::load(fixture("triblocks.txt"));
  Realization p = random_realization(g, 7, 4 * 9 * 9);
  Realization q = random_realization(g, 7, 4 * 9 * 9);
  REQUIRE(p.coords.size() == 9);
  CHECK(p.coords == q.coords);
  std::set<Rational> seen;
  for (auto& [x, y] : p.coords) {
    CHECK(x >= 1);
    CHECK(x <= 324);
    seen.insert(x);
    seen.insert(y);
  }
  CHECK(seen.size() == 18);  // pairwise distinct
  CHECK_THROWS_AS(random_realization(g, 7, 4 * 9 * 9 - 1), std::invalid_argument);
}

TEST_CASE("exact rank on hand matrices") {
  RationalMatrix z(3, 4);
  CHECK(rank_exact(z) == 0);
  RationalMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(rank_exact(id) == 3);
  RationalMatrix dep(2, 2);
  dep.at(0, 0) = Rational(1, 3);
  dep.at(0, 1) = Rational(2, 3);
  dep.at(1, 0) = Rational(1, 6);
  dep.at(1, 1) = Rational(1, 3);  // row 1 = row 0 / 2
  CHECK(rank_exact(dep) == 1);
}

TEST_CASE("measurement rows and values, one edge per class") {
  SUBCASE("PP") {
    PointLineGraph g = PointLineGraph::load(fixture("pp_edge.txt"));
    Realization p = make_realization({{0, 0}, {3, 4}});
    RationalMatrix r = rigidity_matrix(g, p);
    REQUIRE(r.rows() == 1);
    REQUIRE(r.cols() == 4);
    CHECK(r.at(0, 0) == -3);
    CHECK(r.at(0, 1) == -4);
    CHECK(r.at(0, 2) == 3);
    CHECK(r.at(0, 3) == 4);
    CHECK(rigidity_map(g, p)[0] == doctest::Approx(25.0));  // squared length
    Eigen::MatrixXd j = jacobian(g, p);
    for (int c = 0; c < 4; ++c)
      CHECK(j(0, c) ==
            doctest::Approx(2.0 * static_cast<double>(r.at(0, c))));
  }
  SUBCASE("PL at a vertical line") {
    PointLineGraph g = PointLineGraph::parse("point u1\nline v1\nedge u1 v1\n");
    Realization p = make_realization({{0, 0}, {0, 1}});  // x = 0*y + 1
    RationalMatrix r = rigidity_matrix(g, p);
    REQUIRE(r.cols() == 4);  // u1.x u1.y v1.a v1.b
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 0);
    CHECK(r.at(0, 2) == 0);
    CHECK(r.at(0, 3) == -1);
    CHECK(rigidity_map(g, p)[0] == doctest::Approx(-1.0));  // signed offset
    Eigen::MatrixXd j = jacobian(g, p);
    CHECK(j(0, 0) == doctest::Approx(1.0));
    CHECK(j(0, 1) == doctest::Approx(0.0));
    CHECK(j(0, 2) == doctest::Approx(0.0));
    CHECK(j(0, 3) == doctest::Approx(-1.0));
  }
  SUBCASE("LL") {
    PointLineGraph g = PointLineGraph::load(fixture("ll_edge.txt"));
    Realization p = make_realization({{1, 2}, {0, 5}});
    RationalMatrix r = rigidity_matrix(g, p);
    REQUIRE(r.cols() == 4);  // v1.a v1.b v2.a v2.b
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 0);
    CHECK(r.at(0, 2) == -1);
    CHECK(r.at(0, 3) == 0);
    CHECK(rigidity_map(g, p)[0] ==
          doctest::Approx(std::atan(1.0) - std::atan(0.0)));  // pi/4
    Eigen::MatrixXd j = jacobian(g, p);
    CHECK(j(0, 0) == doctest::Approx(0.5));  // 1/(1+1)
    CHECK(j(0, 2) == doctest::Approx(-1.0));
    CHECK(j(0, 1) == doctest::Approx(0.0));
    CHECK(j(0, 3) == doctest::Approx(0.0));
  }
}

TEST_CASE("column labels follow the layout") {
  PointLineGraph g = PointLineGraph::load(fixture("triblocks.txt"));
  std::vector<std::string> labels = full_column_labels(g);
  REQUIRE(labels.size() == 18);
  CHECK(labels[0] == "u1.x");  // points first, even though lines declared first
  CHECK(labels[1] == "u1.y");
  CHECK(labels[11] == "u6.y");
  CHECK(labels[12] == "v1.a");
  CHECK(labels[17] == "v3.b");
}

TEST_CASE("csv export") {
  PointLineGraph g = PointLineGraph::load(fixture("pp_edge.txt"));
  Realization p = make_realization({{0, 0}, {1, 2}});
  RationalMatrix r = rigidity_matrix(g, p);
  r.col_labels = full_column_labels(g);
  std::string csv = r.to_csv();
  CHECK(csv == "u1.x,u1.y,u2.x,u2.y\n-1,-2,1,2\n");

  RationalMatrix m(1, 2);
  m.at(0, 0) = Rational(1, 2);
  CHECK(m.to_csv() == "c0,c1\n1/2,0\n");
}

TEST_CASE("jacobian matches the exact matrix in rank") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    PointLineGraph g = random_mixed_graph(seed, 8);
    long long bound = 4LL * g.vertex_count() * g.vertex_count();
    Realization p = random_realization(g, seed * 31 + 5, bound);
    int exact = rank_exact(rigidity_matrix(g, p));
    // tighter cutoff: LL rows are two orders smaller than PP rows
    CHECK(numeric_rank(jacobian(g, p), 1e-10) == exact);
  }
}

TEST_CASE("jacobian matches finite differences") {
  const double h = 1e-6;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PointLineGraph g = random_mixed_graph(seed, 6);
    if (g.vertex_count() > 5) continue;
    Realization p = random_realization(g, seed + 100, 100);
    Eigen::MatrixXd j = jacobian(g, p);
    std::vector<double> q = flatten(g, p);
    for (size_t i = 0; i < q.size(); ++i) {
      std::vector<double> lo = q, hi = q;
      lo[i] -= h;
      hi[i] += h;
      std::vector<double> flo = rigidity_map_flat(g, lo);
      std::vector<double> fhi = rigidity_map_flat(g, hi);
      for (int r = 0; r < j.rows(); ++r) {
        double fd = (fhi[r] - flo[r]) / (2 * h);
        double scale = std::max({1.0, std::abs(fd), std::abs(j(r, i))});
        CHECK(std::abs(fd - j(r, i)) <= 1e-4 * scale);
      }
    }
  }
}

TEST_CASE("matrix rank never exceeds the motion bound") {
  for (std::uint64_t seed = 40; seed < 60; ++seed) {
    PointLineGraph g = random_mixed_graph(seed, 10);
    if (g.vertex_count() < 2) continue;
    long long bound = std::max(4LL * g.vertex_count() * g.vertex_count(), 100LL);
    int r = rank_exact(rigidity_matrix(g, random_realization(g, seed, bound)));
    CHECK(r <= 2 * g.vertex_count() - 3);
  }
  // pure-line graphs: at most a spanning tree of the line cycle matroid
  PointLineGraph sq = PointLineGraph::load(fixture("line_square.txt"));
  Realization p = random_realization(sq, 3, 100);
  CHECK(rank_exact(rigidity_matrix(sq, p)) <= 3);
}

TEST_CASE("frames on a single incidence") {
  PointLineGraph g = PointLineGraph::parse("point u1\nline v1\nedge u1 v1\n");
  Frame f;
  f.line_t = {0, 7};  // slot 0 unused (point)
  f.edge_c = {3};
  FrameMatrices m = frame_matrices(g, f);
  REQUIRE(m.a.rows() == 1);
  REQUIRE(m.a.cols() == 4);
  CHECK(m.a.at(0, 0) == 1);
  CHECK(m.a.at(0, 1) == 7);
  CHECK(m.a.at(0, 2) == 3);
  CHECK(m.a.at(0, 3) == -1);
  REQUIRE(m.b.cols() == 3);
  CHECK(m.b.at(0, 0) == 1);
  CHECK(m.b.at(0, 1) == 3);
  CHECK(m.b.at(0, 2) == -1);
  REQUIRE(m.c.cols() == 3);
  CHECK(m.c.at(0, 0) == 1);
  CHECK(m.c.at(0, 1) == 7);
  CHECK(m.c.at(0, 2) == -1);

  PointLineGraph pp = PointLineGraph::load(fixture("pp_edge.txt"));
  CHECK_THROWS_AS(random_frame(pp, 1), std::invalid_argument);
}

TEST_CASE("frame matrices realize their count matroids") {
  PointLineGraph k33 = PointLineGraph::load(fixture("k33.txt"));
  PointLineGraph doubled = k33;
  doubled.append_parallel_copy(0);

  auto best_rank = [](const PointLineGraph& g, auto pick) {
    int best = 0;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      FrameMatrices m = frame_matrices(g, random_frame(g, seed));
      best = std::max(best, rank_exact(pick(m)));
    }
    return best;
  };

  int a_rank = best_rank(doubled, [](const FrameMatrices& m) { return m.a; });
  CHECK(a_rank == union_rank(doubled));
  CHECK(a_rank == 10);  // nine independent incidences plus one doubling

  int b_rank = best_rank(doubled, [](const FrameMatrices& m) { return m.b; });
  CHECK(b_rank == count_matroid_rank(doubled, kFrameCounts));
  CHECK(b_rank == 8);  // 2*3 + 3 - 1

  int c_rank = best_rank(k33, [](const FrameMatrices& m) { return m.c; });
  CHECK(c_rank == count_matroid_rank(k33, kRigidCounts));
  CHECK(c_rank == 7);  // 2*3 + 3 - 2
}

TEST_CASE("randomized matrix oracle") {
  PointLineGraph tb = PointLineGraph::load(fixture("triblocks.txt"));
  for (std::uint64_t seed : {1, 17, 91}) CHECK(matrix_rank_oracle(tb, 3, seed) == 14);
  CHECK_THROWS_AS(matrix_rank_oracle(tb, 0, 1), std::invalid_argument);
  PointLineGraph empty;
  CHECK(matrix_rank_oracle(empty) == 0);
}
