#include "plrigid/generate.hpp"

#include <random>
#include <stdexcept>

#include "plrigid/errors.hpp"

namespace plrigid {

PointLineGraph random_graph(int points, int lines, int edges, std::uint64_t seed) {
  if (points < 0 || lines < 0 || edges < 0)
    throw std::invalid_argument("counts must be nonnegative");
  const long long n = static_cast<long long>(points) + lines;
  const long long cap = n * (n - 1) / 2;
  if (edges > cap)
    throw LimitError("cannot place " + std::to_string(edges) +
                     " simple edges on " + std::to_string(n) + " vertices");

  PointLineGraph g;
  for (int i = 0; i < points; ++i) g.add_vertex(VertexKind::Point);
  for (int i = 0; i < lines; ++i) g.add_vertex(VertexKind::Line);

  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(cap);
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});

  std::mt19937_64 rng(seed);
  for (int i = 0; i < edges; ++i) {
    std::uniform_int_distribution<size_t> pick(i, pairs.size() - 1);
    std::swap(pairs[i], pairs[pick(rng)]);
    g.add_edge(pairs[i].first, pairs[i].second);
  }
  return g;
}

}  // namespace plrigid
