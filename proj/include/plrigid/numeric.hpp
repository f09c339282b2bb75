#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "plrigid/graph.hpp"

namespace plrigid {

using Rational = boost::multiprecision::cpp_rational;

class RationalMatrix {
 public:
  RationalMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  Rational& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return data_[static_cast<size_t>(r) * cols_ + c];
  }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::vector<std::string> col_labels;  // optional; used as the CSV header

  // Header row of labels (c<i> when unset) followed by one row per matrix
  // row; rationals print as n or n/d.
  std::string to_csv() const;

  Eigen::MatrixXd to_double() const;

 private:
  int rows_, cols_;
  std::vector<Rational> data_;
};

// Exact rank over the rationals (Gaussian elimination, no tolerances).
int rank_exact(const RationalMatrix& m);

// Rank with singular values below rel_tol * sigma_max treated as zero.
int numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8);

// Coordinates of a realization: (x, y) for a point-vertex, (a, b) for a
// line-vertex with line equation x = a y + b. Entries stay rational so the
// measurement matrix is exact.
struct Realization {
  std::vector<std::pair<Rational, Rational>> coords;  // per vertex id
};

// All 2|V| values drawn as pairwise distinct integers in [1, bound];
// requires bound >= 4 |V|^2 so the rejection sampling stays cheap and the
// realization is generic with high probability (one-sided: a rank computed
// from it never exceeds the generic rank).
Realization random_realization(const PointLineGraph& g, std::uint64_t seed,
                               long long bound);

// Column layout shared by the measurement matrices and the flat coordinate
// vectors: two columns per point-vertex (x, y; ascending id), then two per
// line-vertex (a, b; ascending id).
std::vector<std::string> full_column_labels(const PointLineGraph& g);

// |E| x 2|V| exact measurement matrix. Rows by edge class:
//   PP uv:  (xu - xv, yu - yv) at u, (xv - xu, yv - yu) at v
//   PL uw (point u, line w): 1, -aw at u; (-xu aw - yu, -1) at w
//   LL vw (v = lower id): +1 at a(v), -1 at a(w)
RationalMatrix rigidity_matrix(const PointLineGraph& g, const Realization& p);

// Float Jacobian of the measurement map at p; same shape and column order as
// rigidity_matrix, equal rank row by row (rows are rescaled combinations).
Eigen::MatrixXd jacobian(const PointLineGraph& g, const Realization& p);

// Measurement map: PP squared distance, PL signed scaled point-line offset,
// LL angle difference (atan a_v - atan a_w, v = lower id).
std::vector<double> rigidity_map(const PointLineGraph& g, const Realization& p);

// Same map on a flat coordinate vector in the full column layout (used to
// differentiate numerically).
std::vector<double> rigidity_map_flat(const PointLineGraph& g,
                                      std::span<const double> q);
std::vector<double> flatten(const PointLineGraph& g, const Realization& p);

// Frame data for naturally bipartite graphs: one slope-like value t per
// line-vertex, one value c per edge, all pairwise distinct.
struct Frame {
  std::vector<Rational> line_t;  // per vertex id; meaningful on line-vertices
  std::vector<Rational> edge_c;  // per edge id
};

Frame random_frame(const PointLineGraph& g, std::uint64_t seed,
                   long long bound = 0);  // 0: picked from the draw count

struct FrameMatrices {
  RationalMatrix a;  // |E| x 2|V|,              row-matroid: union
  RationalMatrix b;  // |E| x (2|VP| + |VL|),    row-matroid: 2nuP + nuL - 1
  RationalMatrix c;  // |E| x (2|VP| + |VL|),    row-matroid: 2nuP + nuL - 2
};

// Requires a naturally bipartite graph. Rows for an edge e = uw (point u,
// line w):
//   A: (1, t_w) at u, (c_e, -1) at w
//   B: (1, c_e) at u, -1 at w's single column
//   C: (1, t_w) at u, -1 at w's single column
FrameMatrices frame_matrices(const PointLineGraph& g, const Frame& f);

// Monte Carlo generic rank: max of rank_exact(rigidity_matrix) over `trials`
// random realizations seeded seed, seed+1, ... One-sided error only (never
// above the generic rank).
int matrix_rank_oracle(const PointLineGraph& g, int trials = 5,
                       std::uint64_t seed = 1);

}  // namespace plrigid
