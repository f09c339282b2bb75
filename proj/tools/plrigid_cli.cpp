// Command-line front end for the point-line rigidity library.
//
// Exit codes: 0 success, 2 input/parse error, 3 limit exceeded,
// 4 internal invariant violation.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plrigid/errors.hpp"
#include "plrigid/generate.hpp"
#include "plrigid/numeric.hpp"
#include "plrigid/rigidity.hpp"

using nlohmann::json;
using namespace plrigid;

namespace {

json certificate_json(const UnionCertificate& cert) {
  const PointLineGraph& g = cert.graph();
  auto part = [&](const OrientationState& st) {
    json arr = json::array();
    for (EdgeId e : st.members()) {
      const Edge& ed = g.edge(e);
      VertexId h = st.head(e);
      arr.push_back({{"edge", e},
                     {"tail", g.name(g.other_end(e, h))},
                     {"head", g.name(h)},
                     {"ends", {g.name(ed.u), g.name(ed.v)}}});
    }
    return arr;
  };
  return {{"T", part(cert.part_t())}, {"S", part(cert.part_s())}};
}

std::string ids_line(const std::vector<EdgeId>& ids) {
  std::ostringstream os;
  for (size_t i = 0; i < ids.size(); ++i) os << (i ? " " : "") << ids[i];
  return os.str();
}

std::string partition_line(const std::vector<std::vector<EdgeId>>& parts) {
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << " ";
    os << "[" << ids_line(parts[i]) << "]";
  }
  return os.str();
}

struct RankReport {
  int rank = 0;
  bool rigid = false;
  RigidityState state;
  explicit RankReport(const PointLineGraph& g) : state(g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) state.test_and_add(e);
    rank = static_cast<int>(state.accepted().size());
    rigid = g.vertex_count() <= 1 || rank == 2 * g.vertex_count() - 3;
  }
};

int cmd_rank(const std::string& path, bool with_cert, bool as_json) {
  PointLineGraph g = PointLineGraph::load(path);
  RankReport rep(g);
  if (as_json) {
    json j{{"rank", rep.rank}, {"rigid", rep.rigid}};
    if (with_cert) j["certificate"] = certificate_json(rep.state.certificate());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rank: " << rep.rank << "\n";
    std::cout << "rigid: " << (rep.rigid ? "yes" : "no") << "\n";
    if (with_cert) std::cout << rep.state.certificate().dump();
  }
  return 0;
}

int cmd_rigid(const std::string& path, bool as_json) {
  bool r = is_rigid(PointLineGraph::load(path));
  if (as_json)
    std::cout << json{{"rigid", r}}.dump() << "\n";
  else
    std::cout << "rigid: " << (r ? "yes" : "no") << "\n";
  return 0;
}

int cmd_independent(const std::string& path, bool as_json) {
  PointLineGraph g = PointLineGraph::load(path);
  int r = rank(g);
  bool indep = r == g.edge_count();
  if (as_json)
    std::cout << json{{"independent", indep}, {"rank", r}, {"edges", g.edge_count()}}.dump()
              << "\n";
  else
    std::cout << "independent: " << (indep ? "yes" : "no") << "\n";
  return 0;
}

int cmd_circuit(const std::string& path, int edge, bool as_json) {
  PointLineGraph g = PointLineGraph::load(path);
  if (edge >= g.edge_count()) throw ParseError(0, "no edge with id " + std::to_string(edge));

  RigidityState st(g);
  EdgeId dependent = -1;
  if (edge >= 0) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (e != edge) st.test_and_add(e);
    if (st.test_and_add(edge) == RigidityState::Outcome::Dependent) dependent = edge;
  } else {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (st.test_and_add(e) == RigidityState::Outcome::Dependent && dependent < 0)
        dependent = e;
  }

  if (dependent < 0) {
    if (as_json)
      std::cout << json{{"edge", nullptr}, {"circuit", nullptr}}.dump() << "\n";
    else if (edge >= 0)
      std::cout << "circuit: none (edge " << edge << " is independent)\n";
    else
      std::cout << "circuit: none (the edge set is independent)\n";
    return 0;
  }

  std::vector<EdgeId> c = st.circuit(dependent);
  if (as_json) {
    std::cout << json{{"edge", dependent}, {"circuit", c}}.dump() << "\n";
  } else {
    const Edge& ed = g.edge(dependent);
    std::cout << "dependent edge: " << dependent << " (" << g.name(ed.u) << "-"
              << g.name(ed.v) << ")\n";
    std::cout << "circuit: " << ids_line(c) << "\n";
  }
  return 0;
}

int cmd_certificate(const std::string& path, bool with_partition, int limit,
                    bool as_json) {
  PointLineGraph g = PointLineGraph::load(path);
  RankReport rep(g);
  json j{{"rank", rep.rank}, {"certificate", certificate_json(rep.state.certificate())}};
  std::string partition_text;
  if (with_partition) {
    PartitionValue pv = rank_formula_best_partition(g, g.all_edges(), limit);
    partition_text = partition_line(pv.parts);
    j["partition"] = pv.parts;
    j["partition_value"] = pv.value;
  }
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "rank: " << rep.rank << "\n" << rep.state.certificate().dump();
    if (with_partition) std::cout << "partition: " << partition_text << "\n";
  }
  return 0;
}

int cmd_oracle(const std::string& path, const std::string& method, int trials,
               std::uint64_t seed, int limit, bool as_json) {
  PointLineGraph g = PointLineGraph::load(path);
  if (method == "matrix") {
    int r = matrix_rank_oracle(g, trials, seed);
    if (as_json)
      std::cout << json{{"method", method}, {"rank", r}}.dump() << "\n";
    else
      std::cout << "rank: " << r << "\n";
  } else if (method == "formula") {
    PartitionValue pv = rank_formula_best_partition(g, g.all_edges(), limit);
    if (as_json)
      std::cout << json{{"method", method}, {"rank", pv.value}, {"partition", pv.parts}}.dump()
                << "\n";
    else
      std::cout << "rank: " << pv.value << "\npartition: " << partition_line(pv.parts)
                << "\n";
  } else {  // counts
    bool pass = satisfies_necessary_counts(g, g.all_edges(),
                                           limit > 10 ? limit : 16);
    if (as_json)
      std::cout << json{{"method", method}, {"pass", pass}}.dump() << "\n";
    else
      std::cout << "necessary counts: " << (pass ? "pass" : "fail") << "\n";
  }
  return 0;
}

int cmd_dump_matrix(const std::string& path, const std::string& which,
                    std::uint64_t seed) {
  PointLineGraph g = PointLineGraph::load(path);
  if (which == "R" || which == "J") {
    long long V = g.vertex_count();
    Realization p = random_realization(g, seed, std::max<long long>(4 * V * V, 1000));
    if (which == "R") {
      std::cout << rigidity_matrix(g, p).to_csv();
    } else {
      Eigen::MatrixXd m = jacobian(g, p);
      std::vector<std::string> labels = full_column_labels(g);
      for (size_t c = 0; c < labels.size(); ++c)
        std::cout << (c ? "," : "") << labels[c];
      std::cout << "\n";
      char buf[64];
      for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          std::snprintf(buf, sizeof buf, "%.17g", m(r, c));
          std::cout << (c ? "," : "") << buf;
        }
        std::cout << "\n";
      }
    }
    return 0;
  }
  Frame f = random_frame(g, seed);
  FrameMatrices fm = frame_matrices(g, f);
  const RationalMatrix& m = which == "A" ? fm.a : which == "B" ? fm.b : fm.c;
  std::cout << m.to_csv();
  return 0;
}

int cmd_dot(const std::string& path, bool oriented) {
  PointLineGraph g = PointLineGraph::load(path);
  if (!oriented) {
    std::cout << to_dot(g);
    return 0;
  }
  RankReport rep(g);
  std::cout << to_dot_oriented(rep.state.certificate());
  return 0;
}

int cmd_gen(int points, int lines, int edges, std::uint64_t seed) {
  std::cout << random_graph(points, lines, edges, seed).serialize();
  return 0;
}

int cmd_bench(const std::vector<int>& sizes, int density, std::uint64_t seed,
              bool as_json) {
  json rows = json::array();
  if (!as_json) std::cout << "|V|\t|E|\tms\n";
  for (int n : sizes) {
    int points = (n + 1) / 2, lines = n / 2;
    PointLineGraph g = random_graph(points, lines, density * n, seed + n);
    auto t0 = std::chrono::steady_clock::now();
    int r = rank(g);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (as_json) {
      rows.push_back({{"vertices", n}, {"edges", g.edge_count()}, {"rank", r}, {"ms", ms}});
    } else {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", ms);
      std::cout << n << "\t" << g.edge_count() << "\t" << buf << "\n";
    }
  }
  if (as_json) std::cout << rows.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rank and generic rigidity of 2d point-line frameworks"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string path;
  bool with_cert = false, with_partition = false, oriented = false;
  int edge = -1, trials = 5, limit = 10, points = 0, lines = 0, edges = 0;
  int density = 5;
  std::uint64_t seed = 1;
  std::string method, which;
  std::vector<int> sizes{50, 100, 200};

  auto* rank_cmd = app.add_subcommand("rank", "rank and rigidity of a graph file");
  rank_cmd->add_option("file", path)->required();
  rank_cmd->add_flag("--certificate", with_cert, "also print the T/S certificate");

  auto* rigid_cmd = app.add_subcommand("rigid", "rigidity decision only");
  rigid_cmd->add_option("file", path)->required();

  auto* indep_cmd = app.add_subcommand("independent",
                                       "is the whole edge set independent");
  indep_cmd->add_option("file", path)->required();

  auto* circuit_cmd = app.add_subcommand("circuit", "circuit closed by a dependent edge");
  circuit_cmd->add_option("file", path)->required();
  circuit_cmd->add_option("--edge", edge, "edge id to test last (default: first dependent)");

  auto* cert_cmd = app.add_subcommand("certificate", "rank with the T/S split");
  cert_cmd->add_option("file", path)->required();
  cert_cmd->add_flag("--partition", with_partition, "also print a minimizing partition");
  cert_cmd->add_option("--limit", limit, "partition enumeration cap (default 10)");

  auto* oracle_cmd = app.add_subcommand("oracle", "independent rank checks");
  oracle_cmd->add_option("file", path)->required();
  oracle_cmd->add_option("--method", method, "matrix | formula | counts")->required();
  oracle_cmd->add_option("--trials", trials, "random realizations (matrix, default 5)");
  oracle_cmd->add_option("--seed", seed, "base seed (default 1)");
  oracle_cmd->add_option("--limit", limit, "enumeration cap (formula 10 / counts 16)");

  auto* dump_cmd = app.add_subcommand("dump-matrix", "CSV of a measurement/frame matrix");
  dump_cmd->add_option("file", path)->required();
  dump_cmd->add_option("--matrix", which, "R | J | A | B | C")->required();
  dump_cmd->add_option("--seed", seed, "realization/frame seed (default 1)");

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz export");
  dot_cmd->add_option("file", path)->required();
  dot_cmd->add_flag("--oriented", oriented, "orient edges by the rank certificate");

  auto* gen_cmd = app.add_subcommand("gen", "random graph to stdout");
  gen_cmd->add_option("--points", points)->required();
  gen_cmd->add_option("--lines", lines)->required();
  gen_cmd->add_option("--edges", edges)->required();
  gen_cmd->add_option("--seed", seed, "default 1");

  auto* bench_cmd = app.add_subcommand("bench", "rank timing over graph sizes");
  bench_cmd->add_option("--sizes", sizes, "vertex counts (default 50 100 200)")
      ->delimiter(',');
  bench_cmd->add_option("--density", density, "edges per vertex (default 5)");
  bench_cmd->add_option("--seed", seed, "default 1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (rank_cmd->parsed()) return cmd_rank(path, with_cert, as_json);
    if (rigid_cmd->parsed()) return cmd_rigid(path, as_json);
    if (indep_cmd->parsed()) return cmd_independent(path, as_json);
    if (circuit_cmd->parsed()) return cmd_circuit(path, edge, as_json);
    if (cert_cmd->parsed()) return cmd_certificate(path, with_partition, limit, as_json);
    if (oracle_cmd->parsed()) {
      if (method != "matrix" && method != "formula" && method != "counts")
        throw ParseError(0, "unknown oracle method '" + method + "'");
      return cmd_oracle(path, method, trials, seed, limit, as_json);
    }
    if (dump_cmd->parsed()) {
      if (which != "R" && which != "J" && which != "A" && which != "B" && which != "C")
        throw ParseError(0, "unknown matrix '" + which + "'");
      return cmd_dump_matrix(path, which, seed);
    }
    if (dot_cmd->parsed()) return cmd_dot(path, oriented);
    if (gen_cmd->parsed()) return cmd_gen(points, lines, edges, seed);
    if (bench_cmd->parsed()) return cmd_bench(sizes, density, seed, as_json);
  } catch (const ParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const LimitError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << "\n";
    return 4;
  }
  return 0;
}
