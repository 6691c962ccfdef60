#include "oldsets/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oldsets/errors.hpp"
#include "oldsets/forced.hpp"
#include "oldsets/graph6.hpp"
#include "oldsets/half_graph.hpp"
#include "oldsets/harness.hpp"
#include "oldsets/old_sets.hpp"

namespace oldsets::cli {

namespace {

enum class Format { Text, Structured };

struct Config {
  std::string graph;  // inline graph6 or a path; empty means stdin
  unsigned n = 0;
  unsigned k = 0;
  std::string stream;
  std::string report_path;
  SolveMethod solver = SolveMethod::BranchAndBound;
  Format format = Format::Text;
  unsigned jobs = 1;
  int verbosity = 0;
};

using nlohmann::json;

json set_json(VertexSet s) {
  json a = json::array();
  for (Vertex v : s) a.push_back(v);
  return a;
}

std::vector<Graph6Line> gather_input(const Config& cfg, std::istream& in) {
  if (cfg.graph.empty()) return read_graph6_lines(in);
  std::error_code ec;
  if (std::filesystem::is_regular_file(cfg.graph, ec)) {
    std::ifstream file(cfg.graph);
    if (!file) throw std::runtime_error("cannot open " + cfg.graph);
    return read_graph6_lines(file);
  }
  return {{1, cfg.graph}};
}

int solve_one(const Config& cfg, const Graph6Line& rec, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = parse_graph6(rec.record);
  } catch (const std::exception& e) {
    err << "line " << rec.line_number << ": cannot parse '" << rec.record << "': " << e.what() << '\n';
    return kParse;
  }

  if (!is_locatable(g)) {
    VertexSet isolated;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.row(v).empty()) isolated.insert(v);
    }
    const auto twins = open_twins(g);
    if (cfg.format == Format::Structured) {
      json j{{"graph6", rec.record}, {"locatable", false}, {"isolated", set_json(isolated)}};
      j["open_twins"] = json::array();
      for (auto [u, v] : twins) j["open_twins"].push_back({u, v});
      out << j.dump() << '\n';
    } else {
      out << "graph6: " << rec.record << '\n' << "order: " << g.order() << '\n' << "locatable: no\n";
      out << "isolated: " << to_string(isolated) << '\n' << "open twins:";
      for (auto [u, v] : twins) out << " {" << u << ',' << v << '}';
      out << '\n';
    }
    err << "graph '" << rec.record << "' is not locatable\n";
    return kNotLocatable;
  }

  const SolveResult res = cfg.solver == SolveMethod::BruteForce ? old_number_bruteforce(g) : old_number(g);
  const ForcedClassification forced = classify_forced(g);
  if (cfg.format == Format::Structured) {
    json j{{"graph6", rec.record},
           {"locatable", true},
           {"order", g.order()},
           {"gamma", res.gamma},
           {"witness", set_json(res.witness)},
           {"solver", std::string(to_string(res.method))},
           {"nodes_explored", res.nodes_explored},
           {"domination_forced", set_json(forced.domination.vertices)},
           {"location_forced", set_json(forced.location.vertices)},
           {"unforced", set_json(forced.unforced)}};
    out << j.dump() << '\n';
    return kOk;
  }
  out << "graph6: " << rec.record << '\n'
      << "order: " << g.order() << '\n'
      << "gamma: " << res.gamma << '\n'
      << "witness: " << to_string(res.witness) << '\n'
      << "solver: " << to_string(res.method) << ", nodes explored " << res.nodes_explored << '\n'
      << "domination-forced: " << to_string(forced.domination.vertices) << '\n'
      << "location-forced: " << to_string(forced.location.vertices) << '\n'
      << "unforced: " << to_string(forced.unforced) << '\n';
  if (cfg.verbosity > 0) {
    for (Vertex v : forced.domination.vertices) {
      out << "  " << v << " is the only neighbour of " << *forced.domination.witness[v] << '\n';
    }
    for (Vertex v : forced.location.vertices) {
      const auto [x, y] = *forced.location.witness[v];
      out << "  " << v << " alone separates " << x << " and " << y << '\n';
    }
  }
  return kOk;
}

json labeling_json(const HalfGraphLabeling& lab, const std::vector<Vertex>* to_parent) {
  auto map = [&](const std::vector<Vertex>& seq) {
    json a = json::array();
    for (Vertex v : seq) a.push_back(to_parent ? (*to_parent)[v] : v);
    return a;
  };
  return {{"k", lab.k}, {"v", map(lab.v_order)}, {"w", map(lab.w_order)}};
}

void print_labeling(std::ostream& out, const HalfGraphLabeling& lab, const std::vector<Vertex>& to_parent,
                    const std::string& indent) {
  out << indent << "v:";
  for (Vertex v : lab.v_order) out << ' ' << to_parent[v];
  out << '\n' << indent << "w:";
  for (Vertex w : lab.w_order) out << ' ' << to_parent[w];
  out << '\n';
}

int recognize_one(const Config& cfg, const Graph6Line& rec, std::ostream& out, std::ostream& err) {
  Graph g;
  try {
    g = parse_graph6(rec.record);
  } catch (const std::exception& e) {
    err << "line " << rec.line_number << ": cannot parse '" << rec.record << "': " << e.what() << '\n';
    return kParse;
  }
  std::vector<Vertex> identity(g.order());
  for (Vertex v = 0; v < g.order(); ++v) identity[v] = v;

  if (is_connected(g)) {
    const auto lab = is_half_graph(g);
    if (cfg.format == Format::Structured) {
      json j{{"graph6", rec.record}, {"connected", true}, {"half_graph", lab.has_value()}};
      if (lab) j["labeling"] = labeling_json(*lab, nullptr);
      out << j.dump() << '\n';
    } else {
      out << "graph6: " << rec.record << '\n';
      if (lab) {
        out << "half-graph: yes (k=" << lab->k << ")\n";
        print_labeling(out, *lab, identity, "");
      } else {
        out << "half-graph: no\n";
      }
    }
    return kOk;
  }

  const auto comps = connected_components(g);
  json items = json::array();
  bool all = true;
  if (cfg.format == Format::Text) {
    out << "graph6: " << rec.record << '\n' << "components: " << comps.size() << '\n';
  }
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto lab = is_half_graph(comps[i].graph);
    all = all && lab.has_value();
    if (cfg.format == Format::Structured) {
      json c{{"vertices", comps[i].to_parent}, {"half_graph", lab.has_value()}};
      if (lab) c["labeling"] = labeling_json(*lab, &comps[i].to_parent);
      items.push_back(std::move(c));
    } else {
      out << "component " << i << " (order " << comps[i].graph.order() << "): ";
      if (lab) {
        out << "half-graph k=" << lab->k << '\n';
        print_labeling(out, *lab, comps[i].to_parent, "  ");
      } else {
        out << "not a half-graph\n";
      }
    }
  }
  if (cfg.format == Format::Structured) {
    out << json{{"graph6", rec.record}, {"connected", false}, {"union_of_half_graphs", all}, {"components", items}}.dump()
        << '\n';
  } else {
    out << "union of half-graphs: " << (all ? "yes" : "no") << '\n';
  }
  return kOk;
}

int for_each_record(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err,
                    int (*handler)(const Config&, const Graph6Line&, std::ostream&, std::ostream&)) {
  const auto records = gather_input(cfg, in);
  if (records.empty()) {
    err << "no graph6 input\n";
    return kUsage;
  }
  int worst = kOk;
  for (const auto& rec : records) worst = std::max(worst, handler(cfg, rec, out, err));
  return worst;
}

int cmd_gen(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k == 0) {
    err << "--k must be at least 1\n";
    return kUsage;
  }
  if (2 * cfg.k > kMaxOrder) {
    err << "--k must be at most " << kMaxOrder / 2 << '\n';
    return kUsage;
  }
  out << to_graph6(half_graph(cfg.k)) << '\n';
  return kOk;
}

int cmd_verify(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  if (cfg.n == 0) {
    err << "--n is required\n";
    return kUsage;
  }
  HarnessOptions opt;
  opt.solver = cfg.solver;
  opt.jobs = cfg.jobs;
  HarnessReport report;
  if (!cfg.stream.empty()) {
    std::vector<Graph6Line> records;
    if (cfg.stream == "-") {
      records = read_graph6_lines(in);
    } else {
      std::ifstream file(cfg.stream);
      if (!file) {
        err << "cannot open stream " << cfg.stream << '\n';
        return kUsage;
      }
      records = read_graph6_lines(file);
    }
    report = run_harness(records, cfg.n, opt);
  } else {
    if (cfg.n > kMaxEnumerationOrder) {
      err << "order " << cfg.n << " exceeds the built-in enumerator (max " << kMaxEnumerationOrder
          << "); pass --stream\n";
      return kUsage;
    }
    const auto graphs = enumerate_connected_graphs(cfg.n);
    report = run_harness(graphs, cfg.n, opt);
  }

  if (!cfg.report_path.empty()) {
    std::ofstream file(cfg.report_path);
    if (!file) {
      err << "cannot write report " << cfg.report_path << '\n';
      return kUsage;
    }
    file << format_structured(report);
  }
  out << (cfg.format == Format::Structured ? format_structured(report) : format_text(report));
  if (!report.ok()) return kViolation;
  if (!report.rejected.empty()) return kParse;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Open neighbourhood locating-dominating sets and half-graphs", "oldtool"};
  app.require_subcommand(1, 1);

  std::string solver = "bnb";
  std::string format = "text";
  const std::vector<std::string> solvers{"bruteforce", "bnb"};
  const std::vector<std::string> formats{"text", "structured"};

  auto* solve = app.add_subcommand("solve", "Compute the OLD number, an optimal set and forced vertices");
  solve->add_option("graph", cfg.graph, "graph6 record or file of records (default: stdin)");
  solve->add_option("--solver", solver, "bruteforce | bnb")->check(CLI::IsMember(solvers));
  solve->add_option("--format", format, "text | structured")->check(CLI::IsMember(formats));
  solve->add_flag("-v,--verbose", cfg.verbosity, "Print forcing witnesses");

  auto* gen = app.add_subcommand("gen", "Print the half-graph H_k as graph6");
  gen->add_option("--k", cfg.k, "Half-graph index")->required();

  auto* recognize = app.add_subcommand("recognize", "Decide whether a graph is a half-graph");
  recognize->add_option("graph", cfg.graph, "graph6 record or file of records (default: stdin)");
  recognize->add_option("--format", format, "text | structured")->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Exhaustively check the extremal characterization at one order");
  verify->add_option("--n", cfg.n, "Graph order")->required();
  verify->add_option("--stream", cfg.stream, "graph6 stream to check instead of built-in enumeration ('-' for stdin)");
  verify->add_option("--solver", solver, "bruteforce | bnb")->check(CLI::IsMember(solvers));
  verify->add_option("--format", format, "text | structured")->check(CLI::IsMember(formats));
  verify->add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores)");
  verify->add_option("--report", cfg.report_path, "Write the structured report to this file");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }
  cfg.solver = solver == "bruteforce" ? SolveMethod::BruteForce : SolveMethod::BranchAndBound;
  cfg.format = format == "structured" ? Format::Structured : Format::Text;

  try {
    if (*solve) return for_each_record(cfg, in, out, err, solve_one);
    if (*gen) return cmd_gen(cfg, out, err);
    if (*recognize) return for_each_record(cfg, in, out, err, recognize_one);
    return cmd_verify(cfg, in, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace oldsets::cli
