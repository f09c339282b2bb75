#include "plrigid/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "plrigid/errors.hpp"

namespace plrigid {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

VertexId PointLineGraph::add_vertex(VertexKind kind, std::string name) {
  if (name.empty()) {
    name = (kind == VertexKind::Point ? "u" : "v") +
           std::to_string((kind == VertexKind::Point ? points_ : lines_) + 1);
  }
  kinds_.push_back(kind);
  names_.push_back(std::move(name));
  if (kind == VertexKind::Point)
    ++points_;
  else
    ++lines_;
  return static_cast<VertexId>(kinds_.size()) - 1;
}

EdgeId PointLineGraph::add_edge(VertexId a, VertexId b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (a == b) throw std::invalid_argument("loops are not allowed");
  for (const Edge& ed : edges_) {
    if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))
      throw std::invalid_argument("parallel edge");
  }
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({a, b, id});
  return id;
}

EdgeClass PointLineGraph::edge_class(EdgeId e) const {
  const Edge& ed = edges_[e];
  int lines = (kinds_[ed.u] == VertexKind::Line) + (kinds_[ed.v] == VertexKind::Line);
  return lines == 0 ? EdgeClass::PP : lines == 1 ? EdgeClass::PL : EdgeClass::LL;
}

std::pair<int, int> PointLineGraph::induced_counts(std::span<const EdgeId> edges) const {
  std::vector<char> seen(kinds_.size(), 0);
  int np = 0, nl = 0;
  for (EdgeId e : edges) {
    for (VertexId x : {edges_[e].u, edges_[e].v}) {
      if (seen[x]) continue;
      seen[x] = 1;
      (kinds_[x] == VertexKind::Point ? np : nl)++;
    }
  }
  return {np, nl};
}

std::vector<EdgeId> PointLineGraph::all_edges() const {
  std::vector<EdgeId> out(edges_.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<EdgeId>(i);
  return out;
}

bool PointLineGraph::naturally_bipartite() const {
  for (EdgeId e = 0; e < edge_count(); ++e)
    if (edge_class(e) != EdgeClass::PL) return false;
  return true;
}

std::pair<PointLineGraph, EdgeId> PointLineGraph::add_parallel_copy(EdgeId e) const {
  PointLineGraph g = *this;
  EdgeId id = g.append_parallel_copy(e);
  return {std::move(g), id};
}

EdgeId PointLineGraph::append_parallel_copy(EdgeId e) {
  if (e < 0 || e >= edge_count()) throw std::invalid_argument("unknown edge");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  const Edge& src = edges_[e];
  edges_.push_back({src.u, src.v, src.parallel_group});
  return id;
}

void PointLineGraph::pop_edge() {
  if (edges_.empty()) throw std::logic_error("pop_edge on a graph with no edges");
  edges_.pop_back();
}

PointLineGraph PointLineGraph::parse(std::string_view text) {
  PointLineGraph g;
  std::unordered_map<std::string, VertexId> ids;
  std::set<std::pair<VertexId, VertexId>> pairs;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string> tok;
    std::istringstream is{std::string(line)};
    for (std::string t; is >> t;) tok.push_back(std::move(t));
    if (tok.empty() || tok[0][0] == '#') continue;

    if (tok[0] == "point" || tok[0] == "line") {
      if (tok.size() != 2)
        throw ParseError(lineno, "expected: " + tok[0] + " <name>");
      if (!valid_name(tok[1]))
        throw ParseError(lineno, "invalid vertex name '" + tok[1] + "'");
      if (ids.count(tok[1]))
        throw ParseError(lineno, "duplicate vertex name '" + tok[1] + "'");
      ids[tok[1]] = g.add_vertex(
          tok[0] == "point" ? VertexKind::Point : VertexKind::Line, tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() != 3) throw ParseError(lineno, "expected: edge <name> <name>");
      for (int i = 1; i <= 2; ++i)
        if (!ids.count(tok[i]))
          throw ParseError(lineno, "unknown vertex '" + tok[i] + "'");
      VertexId a = ids[tok[1]], b = ids[tok[2]];
      if (a == b) throw ParseError(lineno, "loop at '" + tok[1] + "'");
      auto pr = std::minmax(a, b);
      if (!pairs.insert({pr.first, pr.second}).second)
        throw ParseError(lineno, "parallel edge " + tok[1] + " " + tok[2]);
      g.edges_.push_back({a, b, static_cast<EdgeId>(g.edges_.size())});
    } else {
      throw ParseError(lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  return g;
}

PointLineGraph PointLineGraph::parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    // byte offset -> line number for the report
    size_t byte = ex.byte > text.size() ? text.size() : ex.byte;
    int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + byte, '\n'));
    throw ParseError(line, std::string("json: ") + ex.what());
  }
  if (!j.is_object()) throw ParseError(0, "json: top level must be an object");

  PointLineGraph g;
  std::unordered_map<std::string, VertexId> ids;
  auto read_vertices = [&](const char* key, VertexKind kind) {
    if (!j.contains(key)) return;
    if (!j[key].is_array()) throw ParseError(0, std::string("json: ") + key + " must be an array");
    for (const auto& it : j[key]) {
      if (!it.is_string()) throw ParseError(0, std::string("json: ") + key + " entries must be strings");
      std::string name = it.get<std::string>();
      if (!valid_name(name)) throw ParseError(0, "invalid vertex name '" + name + "'");
      if (ids.count(name)) throw ParseError(0, "duplicate vertex name '" + name + "'");
      ids[name] = g.add_vertex(kind, name);
    }
  };
  read_vertices("points", VertexKind::Point);
  read_vertices("lines", VertexKind::Line);

  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw ParseError(0, "json: edges must be an array");
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const auto& it : j["edges"]) {
      if (!it.is_array() || it.size() != 2 || !it[0].is_string() || !it[1].is_string())
        throw ParseError(0, "json: each edge must be a pair of vertex names");
      std::string na = it[0].get<std::string>(), nb = it[1].get<std::string>();
      for (const std::string& n : {na, nb})
        if (!ids.count(n)) throw ParseError(0, "unknown vertex '" + n + "'");
      VertexId a = ids[na], b = ids[nb];
      if (a == b) throw ParseError(0, "loop at '" + na + "'");
      auto pr = std::minmax(a, b);
      if (!pairs.insert({pr.first, pr.second}).second)
        throw ParseError(0, "parallel edge " + na + " " + nb);
      g.edges_.push_back({a, b, static_cast<EdgeId>(g.edges_.size())});
    }
  }
  return g;
}

PointLineGraph PointLineGraph::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return parse_json(text);
  return parse(text);
}

std::string PointLineGraph::serialize() const {
  std::ostringstream os;
  for (VertexId v = 0; v < vertex_count(); ++v)
    os << (kinds_[v] == VertexKind::Point ? "point " : "line ") << names_[v] << "\n";
  for (const Edge& ed : edges_) os << "edge " << names_[ed.u] << " " << names_[ed.v] << "\n";
  return os.str();
}

std::string to_dot(const PointLineGraph& g) {
  std::ostringstream os;
  os << "graph plgraph {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    os << "  " << g.name(v) << " [shape=circle";
    if (g.kind(v) == VertexKind::Point) os << ", style=filled, fillcolor=gray75";
    os << "];\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    os << "  " << g.name(g.edge(e).u) << " -- " << g.name(g.edge(e).v) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace plrigid
