#pragma once

#include <cstdint>

#include "plrigid/graph.hpp"

namespace plrigid {

// Random simple graph on `points` point-vertices (u1..) and `lines`
// line-vertices (v1..): `edges` unordered pairs drawn uniformly without
// replacement from all candidate pairs. Deterministic per seed. Throws
// LimitError when edges exceeds the number of available pairs.
PointLineGraph random_graph(int points, int lines, int edges, std::uint64_t seed);

}  // namespace plrigid
