#include "plrigid/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace plrigid {

namespace {

// first column of each vertex in the full (2 per vertex, points first)
// layout, and in the reduced (2 per point, 1 per line) layout
std::vector<int> full_col0(const PointLineGraph& g) {
  std::vector<int> col(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == VertexKind::Point) {
      col[v] = next;
      next += 2;
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == VertexKind::Line) {
      col[v] = next;
      next += 2;
    }
  return col;
}

std::vector<int> reduced_col0(const PointLineGraph& g) {
  std::vector<int> col(g.vertex_count(), -1);
  int next = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == VertexKind::Point) {
      col[v] = next;
      next += 2;
    }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == VertexKind::Line) col[v] = next++;
  return col;
}

std::vector<std::string> reduced_column_labels(const PointLineGraph& g) {
  std::vector<std::string> labels(2 * g.point_count() + g.line_count());
  std::vector<int> col = reduced_col0(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.kind(v) == VertexKind::Point) {
      labels[col[v]] = g.name(v) + ".1";
      labels[col[v] + 1] = g.name(v) + ".2";
    } else {
      labels[col[v]] = g.name(v);
    }
  }
  return labels;
}

// point endpoint first for a PL edge
std::pair<VertexId, VertexId> pl_ends(const PointLineGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return g.kind(ed.u) == VertexKind::Point ? std::pair{ed.u, ed.v}
                                           : std::pair{ed.v, ed.u};
}

// lower vertex id first for an LL edge (fixes the row sign)
std::pair<VertexId, VertexId> ll_ends(const PointLineGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  return {std::min(ed.u, ed.v), std::max(ed.u, ed.v)};
}

double to_d(const Rational& r) { return r.convert_to<double>(); }

}  // namespace

std::string RationalMatrix::to_csv() const {
  std::ostringstream os;
  for (int c = 0; c < cols_; ++c) {
    if (c) os << ",";
    if (c < static_cast<int>(col_labels.size()) && !col_labels[c].empty())
      os << col_labels[c];
    else
      os << "c" << c;
  }
  os << "\n";
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << at(r, c);
    }
    os << "\n";
  }
  return os.str();
}

Eigen::MatrixXd RationalMatrix::to_double() const {
  Eigen::MatrixXd m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(r, c) = to_d(at(r, c));
  return m;
}

int rank_exact(const RationalMatrix& m) {
  const int R = m.rows(), C = m.cols();
  std::vector<Rational> a(static_cast<size_t>(R) * C);
  for (int r = 0; r < R; ++r)
    for (int c = 0; c < C; ++c) a[static_cast<size_t>(r) * C + c] = m.at(r, c);
  auto at = [&](int r, int c) -> Rational& {
    return a[static_cast<size_t>(r) * C + c];
  };
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int r = rank; r < R; ++r)
      if (at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = col; c < C; ++c) std::swap(at(piv, c), at(rank, c));
    for (int r = rank + 1; r < R; ++r) {
      if (at(r, col) == 0) continue;
      Rational f = at(r, col) / at(rank, col);
      at(r, col) = 0;
      for (int c = col + 1; c < C; ++c) at(r, c) -= f * at(rank, c);
    }
    ++rank;
  }
  return rank;
}

int numeric_rank(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv(0) : 0.0;
  if (smax <= 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * smax) ++rank;
  return rank;
}

Realization random_realization(const PointLineGraph& g, std::uint64_t seed,
                               long long bound) {
  const long long V = g.vertex_count();
  Realization p;
  p.coords.resize(V);
  if (V == 0) return p;
  if (bound < 4 * V * V)
    throw std::invalid_argument("realization bound must be at least 4|V|^2");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(1, bound);
  std::unordered_set<long long> used;
  auto draw = [&] {
    long long x;
    do {
      x = dist(rng);
    } while (!used.insert(x).second);
    return x;
  };
  for (VertexId v = 0; v < V; ++v) {
    long long c1 = draw(), c2 = draw();
    p.coords[v] = {Rational(c1), Rational(c2)};
  }
  return p;
}

std::vector<std::string> full_column_labels(const PointLineGraph& g) {
  std::vector<std::string> labels(2 * g.vertex_count());
  std::vector<int> col = full_col0(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    bool pt = g.kind(v) == VertexKind::Point;
    labels[col[v]] = g.name(v) + (pt ? ".x" : ".a");
    labels[col[v] + 1] = g.name(v) + (pt ? ".y" : ".b");
  }
  return labels;
}

RationalMatrix rigidity_matrix(const PointLineGraph& g, const Realization& p) {
  RationalMatrix m(g.edge_count(), 2 * g.vertex_count());
  m.col_labels = full_column_labels(g);
  std::vector<int> col = full_col0(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    switch (g.edge_class(e)) {
      case EdgeClass::PP: {
        const auto& [xu, yu] = p.coords[ed.u];
        const auto& [xv, yv] = p.coords[ed.v];
        m.at(e, col[ed.u]) = xu - xv;
        m.at(e, col[ed.u] + 1) = yu - yv;
        m.at(e, col[ed.v]) = xv - xu;
        m.at(e, col[ed.v] + 1) = yv - yu;
        break;
      }
      case EdgeClass::PL: {
        auto [u, w] = pl_ends(g, e);
        const auto& [xu, yu] = p.coords[u];
        const auto& [aw, bw] = p.coords[w];
        (void)bw;
        m.at(e, col[u]) = 1;
        m.at(e, col[u] + 1) = -aw;
        m.at(e, col[w]) = -xu * aw - yu;
        m.at(e, col[w] + 1) = -1;
        break;
      }
      case EdgeClass::LL: {
        auto [v, w] = ll_ends(g, e);
        m.at(e, col[v]) = 1;
        m.at(e, col[w]) = -1;
        break;
      }
    }
  }
  return m;
}

Eigen::MatrixXd jacobian(const PointLineGraph& g, const Realization& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.edge_count(), 2 * g.vertex_count());
  std::vector<int> col = full_col0(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    switch (g.edge_class(e)) {
      case EdgeClass::PP: {
        double xu = to_d(p.coords[ed.u].first), yu = to_d(p.coords[ed.u].second);
        double xv = to_d(p.coords[ed.v].first), yv = to_d(p.coords[ed.v].second);
        m(e, col[ed.u]) = 2 * (xu - xv);
        m(e, col[ed.u] + 1) = 2 * (yu - yv);
        m(e, col[ed.v]) = 2 * (xv - xu);
        m(e, col[ed.v] + 1) = 2 * (yv - yu);
        break;
      }
      case EdgeClass::PL: {
        auto [u, w] = pl_ends(g, e);
        double xu = to_d(p.coords[u].first), yu = to_d(p.coords[u].second);
        double aw = to_d(p.coords[w].first), bw = to_d(p.coords[w].second);
        double s = 1.0 / std::sqrt(1.0 + aw * aw);
        m(e, col[u]) = s;
        m(e, col[u] + 1) = -aw * s;
        m(e, col[w]) = (-xu * aw - yu + aw * bw) * s * s * s;
        m(e, col[w] + 1) = -s;
        break;
      }
      case EdgeClass::LL: {
        auto [v, w] = ll_ends(g, e);
        double av = to_d(p.coords[v].first), aw = to_d(p.coords[w].first);
        m(e, col[v]) = 1.0 / (1.0 + av * av);
        m(e, col[w]) = -1.0 / (1.0 + aw * aw);
        break;
      }
    }
  }
  return m;
}

std::vector<double> flatten(const PointLineGraph& g, const Realization& p) {
  std::vector<double> q(2 * g.vertex_count(), 0.0);
  std::vector<int> col = full_col0(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    q[col[v]] = to_d(p.coords[v].first);
    q[col[v] + 1] = to_d(p.coords[v].second);
  }
  return q;
}

std::vector<double> rigidity_map_flat(const PointLineGraph& g,
                                      std::span<const double> q) {
  if (static_cast<int>(q.size()) != 2 * g.vertex_count())
    throw std::invalid_argument("coordinate vector has the wrong length");
  std::vector<int> col = full_col0(g);
  std::vector<double> f(g.edge_count(), 0.0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    switch (g.edge_class(e)) {
      case EdgeClass::PP: {
        double dx = q[col[ed.u]] - q[col[ed.v]];
        double dy = q[col[ed.u] + 1] - q[col[ed.v] + 1];
        f[e] = dx * dx + dy * dy;
        break;
      }
      case EdgeClass::PL: {
        auto [u, w] = pl_ends(g, e);
        double xu = q[col[u]], yu = q[col[u] + 1];
        double aw = q[col[w]], bw = q[col[w] + 1];
        f[e] = (xu - yu * aw - bw) / std::sqrt(1.0 + aw * aw);
        break;
      }
      case EdgeClass::LL: {
        auto [v, w] = ll_ends(g, e);
        f[e] = std::atan(q[col[v]]) - std::atan(q[col[w]]);
        break;
      }
    }
  }
  return f;
}

std::vector<double> rigidity_map(const PointLineGraph& g, const Realization& p) {
  return rigidity_map_flat(g, flatten(g, p));
}

Frame random_frame(const PointLineGraph& g, std::uint64_t seed, long long bound) {
  if (!g.naturally_bipartite())
    throw std::invalid_argument("frame requires a naturally bipartite graph");
  const long long draws = g.line_count() + g.edge_count();
  if (bound <= 0) bound = std::max<long long>(1000, 4 * draws * draws);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> dist(1, bound);
  std::unordered_set<long long> used;
  auto draw = [&] {
    long long x;
    do {
      x = dist(rng);
    } while (!used.insert(x).second);
    return x;
  };
  Frame f;
  f.line_t.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.kind(v) == VertexKind::Line) f.line_t[v] = Rational(draw());
  f.edge_c.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) f.edge_c[e] = Rational(draw());
  return f;
}

FrameMatrices frame_matrices(const PointLineGraph& g, const Frame& f) {
  if (!g.naturally_bipartite())
    throw std::invalid_argument("frame requires a naturally bipartite graph");
  const int m = g.edge_count();
  FrameMatrices out{RationalMatrix(m, 2 * g.vertex_count()),
                    RationalMatrix(m, 2 * g.point_count() + g.line_count()),
                    RationalMatrix(m, 2 * g.point_count() + g.line_count())};
  out.a.col_labels = full_column_labels(g);
  out.b.col_labels = reduced_column_labels(g);
  out.c.col_labels = reduced_column_labels(g);
  std::vector<int> fcol = full_col0(g);
  std::vector<int> rcol = reduced_col0(g);
  for (EdgeId e = 0; e < m; ++e) {
    auto [u, w] = pl_ends(g, e);
    const Rational& t = f.line_t[w];
    const Rational& c = f.edge_c[e];
    out.a.at(e, fcol[u]) = 1;
    out.a.at(e, fcol[u] + 1) = t;
    out.a.at(e, fcol[w]) = c;
    out.a.at(e, fcol[w] + 1) = -1;

    out.b.at(e, rcol[u]) = 1;
    out.b.at(e, rcol[u] + 1) = c;
    out.b.at(e, rcol[w]) = -1;

    out.c.at(e, rcol[u]) = 1;
    out.c.at(e, rcol[u] + 1) = t;
    out.c.at(e, rcol[w]) = -1;
  }
  return out;
}

int matrix_rank_oracle(const PointLineGraph& g, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  const long long V = g.vertex_count();
  const long long bound = std::max<long long>(4 * V * V, 1000);
  int best = 0;
  for (int t = 0; t < trials; ++t) {
    Realization p = random_realization(g, seed + static_cast<std::uint64_t>(t), bound);
    best = std::max(best, rank_exact(rigidity_matrix(g, p)));
  }
  return best;
}

}  // namespace plrigid
