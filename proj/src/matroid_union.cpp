#include "plrigid/matroid_union.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace plrigid {

namespace {
std::uint64_t next_certificate_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}
}  // namespace

UnionCertificate::UnionCertificate(const PointLineGraph& g)
    : id_(next_certificate_id()), t_(g, kRigidCounts), s_(g, kLineCounts) {}

UnionCertificate::Snapshot UnionCertificate::snapshot() const {
  return {id_, t_, s_};
}

void UnionCertificate::rollback(const Snapshot& snap) {
  if (snap.owner != id_)
    throw std::invalid_argument("snapshot belongs to a different certificate");
  t_ = snap.t;
  s_ = snap.s;
}

std::vector<EdgeId> UnionCertificate::members() const {
  std::vector<EdgeId> out = t_.members();
  std::vector<EdgeId> s = s_.members();
  out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  return out;
}

UnionCertificate::AugmentResult UnionCertificate::augment(EdgeId e) {
  if (contains(e)) throw std::invalid_argument("edge already in the certificate");
  const EdgeId m = graph().edge_count();
  visited_[0].assign(m, 0);
  visited_[1].assign(m, 0);

  struct Node {
    EdgeId edge;
    int part;
    int parent;
  };
  std::vector<Node> nodes;
  nodes.push_back({e, 0, -1});
  visited_[0][e] = 1;
  nodes.push_back({e, 1, -1});
  visited_[1][e] = 1;

  for (size_t qh = 0; qh < nodes.size(); ++qh) {
    const Node n = nodes[qh];
    OrientationState& st = n.part == 0 ? t_ : s_;
    auto rej = st.probe(n.edge);
    if (!rej) {
      AugmentResult res;
      res.augmented = true;
      std::vector<int> chain;
      for (int i = static_cast<int>(qh); i >= 0; i = nodes[i].parent)
        chain.push_back(i);
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        res.path.push_back(nodes[*it].edge);
        res.parts.push_back(nodes[*it].part);
      }
      apply_path(res);
      return res;
    }
    const int np = 1 - n.part;
    for (EdgeId c : rej->circuit) {
      if (c == n.edge || visited_[np][c]) continue;
      visited_[np][c] = 1;
      nodes.push_back({c, np, static_cast<int>(qh)});
    }
  }
  return {};
}

void UnionCertificate::apply_path(const AugmentResult& res) {
  const auto& path = res.path;
  const auto& parts = res.parts;
  // free the moved elements first so every insertion lands in a subset of
  // the final independent part
  for (size_t i = path.size(); i-- > 1;)
    (parts[i] == 0 ? s_ : t_).remove(path[i]);
  for (size_t i = path.size(); i-- > 0;) {
    OrientationState& dst = parts[i] == 0 ? t_ : s_;
    if (dst.try_insert(path[i]))
      throw std::logic_error("augmenting-path exchange failed to reinsert");
    EdgeClass cls = graph().edge_class(path[i]);
    if ((parts[i] == 0 && cls == EdgeClass::LL) ||
        (parts[i] == 1 && cls == EdgeClass::PP))
      throw std::logic_error("edge landed in a part that cannot hold its class");
  }
}

void UnionCertificate::remove(EdgeId e) {
  if (t_.contains(e))
    t_.remove(e);
  else if (s_.contains(e))
    s_.remove(e);
  else
    throw std::invalid_argument("edge not in the certificate");
}

std::string UnionCertificate::dump() const {
  const PointLineGraph& g = graph();
  auto part_line = [&](const char* label, const OrientationState& st) {
    std::ostringstream os;
    os << label;
    for (EdgeId f : st.members()) {
      const Edge& ed = g.edge(f);
      os << " " << f << ":" << g.name(ed.u) << "-" << g.name(ed.v) << "->"
         << g.name(st.head(f));
    }
    os << "\n";
    return os.str();
  };
  return part_line("T:", t_) + part_line("S:", s_);
}

void UnionCertificate::validate() const {
  const PointLineGraph& g = graph();
  std::vector<int> indeg_t(g.vertex_count(), 0), indeg_s(g.vertex_count(), 0);
  for (EdgeId e : t_.members()) {
    if (s_.contains(e)) throw std::logic_error("edge in both parts");
    if (g.edge_class(e) == EdgeClass::LL) throw std::logic_error("LL edge in T");
    ++indeg_t[t_.head(e)];
  }
  for (EdgeId e : s_.members()) {
    if (g.edge_class(e) == EdgeClass::PP) throw std::logic_error("PP edge in S");
    ++indeg_s[s_.head(e)];
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (indeg_t[v] != t_.indegree(v) || indeg_s[v] != s_.indegree(v))
      throw std::logic_error("in-degree bookkeeping out of sync");
    if (indeg_t[v] > t_.capacity(v) || indeg_s[v] > s_.capacity(v))
      throw std::logic_error("in-degree above capacity");
  }
}

int union_rank(const PointLineGraph& g) {
  UnionCertificate cert(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) cert.augment(e);
  return cert.size();
}

std::string to_dot_oriented(const UnionCertificate& cert) {
  const PointLineGraph& g = cert.graph();
  std::ostringstream os;
  os << "digraph plcert {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  " << g.name(v) << " [shape=circle";
    if (g.kind(v) == VertexKind::Point) os << ", style=filled, fillcolor=gray75";
    os << "];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (cert.part_t().contains(e)) {
      VertexId h = cert.part_t().head(e);
      os << "  " << g.name(g.other_end(e, h)) << " -> " << g.name(h) << ";\n";
    } else if (cert.part_s().contains(e)) {
      VertexId h = cert.part_s().head(e);
      os << "  " << g.name(g.other_end(e, h)) << " -> " << g.name(h)
         << " [style=dashed, color=blue];\n";
    } else {
      os << "  " << g.name(ed.u) << " -> " << g.name(ed.v)
         << " [style=dotted, dir=none];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace plrigid
