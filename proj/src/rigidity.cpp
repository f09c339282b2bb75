#include "plrigid/rigidity.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>

#include "plrigid/errors.hpp"

namespace plrigid {

RigidityState::RigidityState(const PointLineGraph& g)
    : work_(g), cert_(work_), accepted_mask_(g.edge_count(), 0) {}

RigidityState::Outcome RigidityState::test_and_add(EdgeId e) {
  if (e < 0 || e >= static_cast<EdgeId>(accepted_mask_.size()))
    throw std::invalid_argument("unknown edge");
  if (accepted_mask_[e]) throw std::invalid_argument("edge already accepted");

  auto snap = cert_.snapshot();
  if (!cert_.augment(e).augmented) return Outcome::Dependent;

  EdgeId copy = work_.append_parallel_copy(e);
  bool ok = cert_.augment(copy).augmented;
  if (!ok) {
    cert_.rollback(snap);
    work_.pop_edge();
    return Outcome::Dependent;
  }
  cert_.remove(copy);
  work_.pop_edge();
  accepted_.push_back(e);
  accepted_mask_[e] = 1;
  return Outcome::Independent;
}

std::vector<EdgeId> RigidityState::circuit(EdgeId e) const {
  if (e < 0 || e >= static_cast<EdgeId>(accepted_mask_.size()))
    throw std::invalid_argument("unknown edge");
  if (accepted_mask_[e]) throw std::invalid_argument("edge was accepted, not rejected");

  std::vector<EdgeId> cur = accepted_;
  cur.push_back(e);
  std::sort(cur.begin(), cur.end());
  if (rank_of(work_, cur) == static_cast<int>(cur.size()))
    throw std::invalid_argument("accepted + e is independent, no circuit");

  for (size_t i = 0; i < cur.size();) {
    if (cur[i] == e) {
      ++i;
      continue;
    }
    std::vector<EdgeId> without;
    without.reserve(cur.size() - 1);
    for (size_t j = 0; j < cur.size(); ++j)
      if (j != i) without.push_back(cur[j]);
    if (rank_of(work_, without) < static_cast<int>(without.size())) {
      cur = std::move(without);  // still dependent without cur[i]: drop it
    } else {
      ++i;
    }
  }
  return cur;
}

int rank(const PointLineGraph& g) {
  RigidityState st(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) st.test_and_add(e);
  return static_cast<int>(st.accepted().size());
}

int rank_of(const PointLineGraph& g, std::span<const EdgeId> subset) {
  std::vector<EdgeId> edges(subset.begin(), subset.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  RigidityState st(g);
  int r = 0;
  for (EdgeId e : edges)
    if (st.test_and_add(e) == RigidityState::Outcome::Independent) ++r;
  return r;
}

bool is_rigid(const PointLineGraph& g) {
  if (g.vertex_count() <= 1) return true;
  return rank(g) == 2 * g.vertex_count() - 3;
}

namespace {

// Shared scaffolding for the partition enumerations: restricted growth
// strings assign[i] in 0..max(assign[0..i-1])+1, assign[0] == 0.
struct PartitionEnumerator {
  explicit PartitionEnumerator(int n) : n(n), assign(n, 0), prefix_max(n, 0) {}

  bool next() {
    int i = n - 1;
    while (i > 0 && assign[i] > prefix_max[i - 1]) --i;
    if (i <= 0) return false;
    ++assign[i];
    prefix_max[i] = std::max(prefix_max[i - 1], assign[i]);
    for (int j = i + 1; j < n; ++j) {
      assign[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
    return true;
  }

  int parts() const { return prefix_max[n - 1] + 1; }

  int n;
  std::vector<int> assign;
  std::vector<int> prefix_max;
};

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

std::vector<EdgeId> sorted_unique(std::span<const EdgeId> edges) {
  std::vector<EdgeId> out(edges.begin(), edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Per-partition value of the minimization; part counts and the shared-line
// components are recomputed with epoch-stamped scratch to keep the inner
// loop allocation-free.
class FormulaEvaluator {
 public:
  FormulaEvaluator(const PointLineGraph& g, const std::vector<EdgeId>& edges)
      : g_(g),
        edges_(edges),
        mark_epoch_(g.vertex_count(), 0),
        mark_part_(g.vertex_count(), -1),
        line_owner_epoch_(g.vertex_count(), 0),
        line_owner_(g.vertex_count(), -1) {
    auto [np, nl] = g.induced_counts(edges);
    (void)np;
    nl_total_ = nl;
  }

  long long value(const std::vector<int>& assign, int parts) {
    ++epoch_;
    bucket_heads_.assign(parts, -1);
    bucket_next_.assign(edges_.size(), -1);
    for (int i = static_cast<int>(edges_.size()) - 1; i >= 0; --i) {
      bucket_next_[i] = bucket_heads_[assign[i]];
      bucket_heads_[assign[i]] = i;
    }
    DisjointSets dsu(parts);
    long long sum = 0;
    for (int p = 0; p < parts; ++p) {
      int np = 0, nl = 0;
      for (int i = bucket_heads_[p]; i >= 0; i = bucket_next_[i]) {
        const Edge& ed = g_.edge(edges_[i]);
        for (VertexId x : {ed.u, ed.v}) {
          if (mark_epoch_[x] == epoch_ && mark_part_[x] == p) continue;
          mark_epoch_[x] = epoch_;
          mark_part_[x] = p;
          if (g_.kind(x) == VertexKind::Point) {
            ++np;
          } else {
            ++nl;
            if (line_owner_epoch_[x] != epoch_) {
              line_owner_epoch_[x] = epoch_;
              line_owner_[x] = p;
            } else {
              dsu.unite(p, line_owner_[x]);
            }
          }
        }
      }
      sum += 2LL * np + nl - 2;
    }
    int components = 0;
    for (int p = 0; p < parts; ++p)
      if (dsu.find(p) == p) ++components;
    return nl_total_ + sum - components;
  }

 private:
  const PointLineGraph& g_;
  const std::vector<EdgeId>& edges_;
  long long nl_total_;
  int epoch_ = 0;
  std::vector<int> mark_epoch_, mark_part_;
  std::vector<int> line_owner_epoch_, line_owner_;
  std::vector<int> bucket_heads_, bucket_next_;
};

}  // namespace

PartitionValue rank_formula_best_partition(const PointLineGraph& g,
                                           std::span<const EdgeId> edges_in,
                                           int limit) {
  std::vector<EdgeId> edges = sorted_unique(edges_in);
  const int n = static_cast<int>(edges.size());
  if (n > limit)
    throw LimitError("partition enumeration limited to " + std::to_string(limit) +
                     " edges, got " + std::to_string(n));
  if (n == 0) return {};

  FormulaEvaluator eval(g, edges);
  PartitionEnumerator en(n);
  long long best = LLONG_MAX;
  std::vector<int> best_assign;
  int best_parts = 0;
  do {
    long long v = eval.value(en.assign, en.parts());
    if (v < best) {
      best = v;
      best_assign = en.assign;
      best_parts = en.parts();
    }
  } while (en.next());

  PartitionValue out;
  out.value = best;
  out.parts.assign(best_parts, {});
  for (int i = 0; i < n; ++i) out.parts[best_assign[i]].push_back(edges[i]);
  return out;
}

long long rank_formula_oracle(const PointLineGraph& g,
                              std::span<const EdgeId> edges, int limit) {
  return rank_formula_best_partition(g, edges, limit).value;
}

int components_sharing_lines(const PointLineGraph& g,
                             const std::vector<std::vector<EdgeId>>& parts) {
  std::vector<char> edge_seen;
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (EdgeId e : part) {
      if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("unknown edge");
      if (e >= static_cast<EdgeId>(edge_seen.size())) edge_seen.resize(e + 1, 0);
      if (edge_seen[e]) throw std::invalid_argument("overlapping parts");
      edge_seen[e] = 1;
    }
  }
  const int p = static_cast<int>(parts.size());
  DisjointSets dsu(p == 0 ? 1 : p);
  std::vector<int> line_owner(g.vertex_count(), -1);
  for (int i = 0; i < p; ++i) {
    for (EdgeId e : parts[i]) {
      const Edge& ed = g.edge(e);
      for (VertexId x : {ed.u, ed.v}) {
        if (g.kind(x) != VertexKind::Line) continue;
        if (line_owner[x] < 0)
          line_owner[x] = i;
        else
          dsu.unite(i, line_owner[x]);
      }
    }
  }
  int components = 0;
  for (int i = 0; i < p; ++i)
    if (dsu.find(i) == i) ++components;
  return components;
}

bool satisfies_necessary_counts(const PointLineGraph& g,
                                std::span<const EdgeId> edges_in, int limit) {
  std::vector<EdgeId> edges = sorted_unique(edges_in);
  const int n = static_cast<int>(edges.size());
  if (n > limit)
    throw LimitError("subset enumeration limited to " + std::to_string(limit) +
                     " edges, got " + std::to_string(n));
  std::vector<int> mark(g.vertex_count(), -1);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    int np = 0, nl = 0, sz = 0;
    for (int i = 0; i < n; ++i) {
      if (!(mask & (1u << i))) continue;
      ++sz;
      const Edge& ed = g.edge(edges[i]);
      for (VertexId x : {ed.u, ed.v}) {
        if (mark[x] == static_cast<int>(mask)) continue;
        mark[x] = static_cast<int>(mask);
        (g.kind(x) == VertexKind::Point ? np : nl)++;
      }
    }
    if (sz > 2 * (np + nl) - 3) return false;
    if (np == 0 && sz > nl - 1) return false;
  }
  return true;
}

long long lovasz_yemini_value(const PointLineGraph& g,
                              std::span<const EdgeId> edges_in, int limit) {
  std::vector<EdgeId> edges = sorted_unique(edges_in);
  for (EdgeId e : edges)
    if (g.edge_class(e) != EdgeClass::PP)
      throw std::invalid_argument("point-only evaluation needs PP edges");
  const int n = static_cast<int>(edges.size());
  if (n > limit)
    throw LimitError("partition enumeration limited to " + std::to_string(limit) +
                     " edges, got " + std::to_string(n));
  if (n == 0) return 0;

  std::vector<int> mark(g.vertex_count());
  std::vector<int> mark_part(g.vertex_count(), -1);
  int epoch = 0;
  PartitionEnumerator en(n);
  long long best = LLONG_MAX;
  do {
    ++epoch;
    const int parts = en.parts();
    long long v = 0;
    for (int p = 0; p < parts; ++p) {  // parts processed contiguously
      int np = 0;
      for (int i = 0; i < n; ++i) {
        if (en.assign[i] != p) continue;
        const Edge& ed = g.edge(edges[i]);
        for (VertexId x : {ed.u, ed.v}) {
          if (mark[x] == epoch && mark_part[x] == p) continue;
          mark[x] = epoch;
          mark_part[x] = p;
          ++np;
        }
      }
      v += 2LL * np - 3;
    }
    best = std::min(best, v);
  } while (en.next());
  return best;
}

}  // namespace plrigid
