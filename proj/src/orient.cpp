#include "plrigid/orient.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace plrigid {

OrientationState::OrientationState(const PointLineGraph& g, CountParams params)
    : g_(&g), params_(params) {
  if (params.point_cap < 0 || params.line_cap < 0 || params.deficiency < 0 ||
      params.deficiency > std::min(2 * params.point_cap, 2 * params.line_cap))
    throw std::invalid_argument("count params need 0 <= k <= min(2i, 2j)");
  in_set_.assign(g.edge_count(), 0);
  head_.assign(g.edge_count(), -1);
  indeg_.assign(g.vertex_count(), 0);
  visited_.assign(g.vertex_count(), 0);
  parent_edge_.assign(g.vertex_count(), -1);
}

void OrientationState::ensure_edge_slot(EdgeId e) {
  if (e >= static_cast<EdgeId>(in_set_.size())) {
    in_set_.resize(e + 1, 0);
    head_.resize(e + 1, -1);
  }
}

std::vector<EdgeId> OrientationState::members() const {
  std::vector<EdgeId> out;
  out.reserve(size_);
  for (EdgeId e = 0; e < static_cast<EdgeId>(in_set_.size()); ++e)
    if (in_set_[e]) out.push_back(e);
  return out;
}

void OrientationState::build_in_adjacency() {
  const int V = g_->vertex_count();
  in_off_.assign(V + 1, 0);
  const EdgeId m = static_cast<EdgeId>(in_set_.size());
  for (EdgeId f = 0; f < m; ++f)
    if (in_set_[f]) ++in_off_[head_[f] + 1];
  for (int v = 0; v < V; ++v) in_off_[v + 1] += in_off_[v];
  in_edges_.resize(in_off_[V]);
  std::vector<int> cur(in_off_.begin(), in_off_.end() - 1);
  for (EdgeId f = 0; f < m; ++f)
    if (in_set_[f]) in_edges_[cur[head_[f]]++] = f;
}

// BFS from {w, z} along edges of I against their direction. Returns the
// first vertex found (in BFS order, tails per step ascending) whose
// in-degree is below capacity, or -1; visit_order_ then holds the full
// reachable set and parent_edge_ the search tree.
VertexId OrientationState::backward_search(VertexId w, VertexId z) {
  build_in_adjacency();
  ++epoch_;
  bfs_queue_.clear();
  visit_order_.clear();
  auto discover = [&](VertexId x, EdgeId via) {
    visited_[x] = epoch_;
    parent_edge_[x] = via;
    bfs_queue_.push_back(x);
    visit_order_.push_back(x);
  };
  discover(std::min(w, z), -1);
  discover(std::max(w, z), -1);
  for (size_t qh = 0; qh < bfs_queue_.size(); ++qh) {
    VertexId x = bfs_queue_[qh];
    cand_.clear();
    for (int idx = in_off_[x]; idx < in_off_[x + 1]; ++idx) {
      EdgeId f = in_edges_[idx];
      VertexId t = g_->other_end(f, x);
      if (visited_[t] != epoch_) cand_.push_back({t, f});
    }
    std::sort(cand_.begin(), cand_.end());
    for (auto [t, f] : cand_) {
      if (visited_[t] == epoch_) continue;  // same tail twice in cand_
      discover(t, f);
      if (indeg_[t] < capacity(t)) return t;
    }
  }
  return -1;
}

bool OrientationState::attempt(EdgeId e, std::vector<HeadChange>& log,
                               CircuitReport* rejection) {
  if (e < 0 || e >= g_->edge_count()) throw std::invalid_argument("unknown edge");
  ensure_edge_slot(e);
  if (in_set_[e]) throw std::invalid_argument("edge already in the independent set");
  const Edge& ed = g_->edge(e);
  const VertexId w = ed.u, z = ed.v;
  const int gw = capacity(w), gz = capacity(z);
  const int k = params_.deficiency;

  if (gw + gz <= k) {
    // e alone violates the count: no orientation can host it
    if (rejection) {
      rejection->circuit = {e};
      rejection->reachable = {std::min(w, z), std::max(w, z)};
    }
    return false;
  }

  const int target = gw + gz - (k + 1);
  int rounds = 0;
  while (indeg_[w] + indeg_[z] > target) {
    if (++rounds > gw + gz + 1)
      throw std::logic_error("orientation search failed to converge");
    VertexId y = backward_search(w, z);
    if (y < 0) {
      if (rejection) {
        rejection->reachable.assign(visit_order_.begin(), visit_order_.end());
        std::sort(rejection->reachable.begin(), rejection->reachable.end());
        rejection->circuit.clear();
        for (EdgeId f = 0; f < static_cast<EdgeId>(in_set_.size()); ++f)
          if (in_set_[f] && visited_[g_->edge(f).u] == epoch_ &&
              visited_[g_->edge(f).v] == epoch_)
            rejection->circuit.push_back(f);
        rejection->circuit.push_back(e);
        std::sort(rejection->circuit.begin(), rejection->circuit.end());
      }
      return false;
    }
    // reverse the search-tree path from y back to {w, z}
    VertexId cur = y;
    while (cur != w && cur != z) {
      EdgeId f = parent_edge_[cur];
      VertexId next = head_[f];
      log.push_back({f, next});
      head_[f] = cur;
      --indeg_[next];
      ++indeg_[cur];
      cur = next;
    }
  }

  // room made; orient e into the endpoint with the smaller indeg/capacity
  // ratio (lower id on ties)
  bool w_ok = indeg_[w] < gw, z_ok = indeg_[z] < gz;
  assert(w_ok || z_ok);
  VertexId h;
  if (w_ok && z_ok) {
    long lhs = static_cast<long>(indeg_[w]) * gz;
    long rhs = static_cast<long>(indeg_[z]) * gw;
    h = lhs < rhs ? w : rhs < lhs ? z : std::min(w, z);
  } else {
    h = w_ok ? w : z;
  }
  log.push_back({e, -1});
  head_[e] = h;
  ++indeg_[h];
  in_set_[e] = 1;
  ++size_;
  return true;
}

void OrientationState::undo(const std::vector<HeadChange>& log) {
  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    if (it->old_head < 0) {
      --indeg_[head_[it->edge]];
      head_[it->edge] = -1;
      in_set_[it->edge] = 0;
      --size_;
    } else {
      VertexId cur = head_[it->edge];
      head_[it->edge] = it->old_head;
      --indeg_[cur];
      ++indeg_[it->old_head];
    }
  }
}

std::optional<CircuitReport> OrientationState::try_insert(EdgeId e) {
  log_.clear();
  CircuitReport rejection;
  if (attempt(e, log_, &rejection)) return std::nullopt;
  undo(log_);
  return rejection;
}

std::optional<CircuitReport> OrientationState::probe(EdgeId e) {
  log_.clear();
  CircuitReport rejection;
  bool ok = attempt(e, log_, &rejection);
  undo(log_);
  if (ok) return std::nullopt;
  return rejection;
}

CircuitReport OrientationState::fundamental_circuit(EdgeId e) {
  auto rej = probe(e);
  if (!rej) throw std::invalid_argument("I + e is independent, no circuit");
  return *rej;
}

void OrientationState::remove(EdgeId e) {
  if (!contains(e)) throw std::invalid_argument("edge not in the independent set");
  --indeg_[head_[e]];
  head_[e] = -1;
  in_set_[e] = 0;
  --size_;
}

int count_matroid_rank(const PointLineGraph& g, CountParams params) {
  OrientationState st(g, params);
  for (EdgeId e = 0; e < g.edge_count(); ++e) st.try_insert(e);
  return st.size();
}

}  // namespace plrigid
