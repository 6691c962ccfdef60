#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oldsets/cli.hpp"
#include "oldsets/graph6.hpp"
#include "oldsets/half_graph.hpp"
#include "oldsets/old_sets.hpp"
#include "support/oracles.hpp"

using namespace oldsets;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "oldtool");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve") {
  const std::string h4 = to_graph6(half_graph(4));
  const Run r = run({"solve", h4});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "gamma: 8"));
  CHECK(contains(r.out, "graph6: " + h4));
  CHECK(contains(r.out, "unforced: {}"));

  const std::string k3 = to_graph6(oracle::complete(3));
  const Run k = run({"solve", k3, "--solver", "bruteforce"});
  CHECK(k.code == cli::kOk);
  CHECK(contains(k.out, "gamma: 2"));
  CHECK(contains(k.out, "unforced: {0,1,2}"));
  CHECK(contains(k.out, "bruteforce"));

  const Run c4 = run({"solve", "Cl"});
  CHECK(c4.code == cli::kNotLocatable);
  CHECK(contains(c4.out, "open twins: {0,2} {1,3}"));

  CHECK(run({"solve", "A_?"}).code == cli::kParse);
  CHECK(run({"solve", "--solver", "magic", "A_"}).code == cli::kUsage);
}

TEST_CASE("solve reads stdin and files, and verbose prints witnesses") {
  const Run r = run({"solve", "-v"}, "A_\nECr_\n");
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "graph6: A_"));
  CHECK(contains(r.out, "graph6: ECr_"));
  CHECK(contains(r.out, "is the only neighbour of"));
  CHECK(contains(r.out, "alone separates"));

  const auto path = std::filesystem::temp_directory_path() / "oldtool_solve_input.g6";
  std::ofstream(path) << "Cl\nA_\n";
  const Run f = run({"solve", path.string()});
  CHECK(f.code == cli::kNotLocatable);
  CHECK(contains(f.out, "gamma: 2"));
  std::filesystem::remove(path);

  CHECK(run({"solve"}, "").code == cli::kUsage);
}

TEST_CASE("structured solve output is stable") {
  const std::string h3 = to_graph6(half_graph(3));
  const Run a = run({"solve", h3, "--format", "structured"});
  const Run b = run({"solve", h3, "--format", "structured"});
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["gamma"] == 6);
  CHECK(j["nodes_explored"] == 1);
  CHECK(j["graph6"] == h3);
  CHECK(j["unforced"].empty());
}

TEST_CASE("gen") {
  CHECK(run({"gen", "--k", "1"}).out == "A_\n");
  const Run h3 = run({"gen", "--k", "3"});
  CHECK(h3.code == cli::kOk);
  CHECK(parse_graph6(h3.out.substr(0, h3.out.size() - 1)).edges() ==
        std::vector<Edge>{{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 5}});
  CHECK(run({"gen", "--k", "0"}).code == cli::kUsage);
  CHECK(run({"gen"}).code == cli::kUsage);

  const Run h2 = run({"gen", "--k", "2"});
  const Run rec = run({"recognize"}, h2.out);
  CHECK(contains(rec.out, "half-graph: yes (k=2)"));
}

TEST_CASE("recognize") {
  std::mt19937_64 rng(5);
  const std::string h6 = to_graph6(relabel(half_graph(6), oracle::random_permutation(rng, 12)));
  const Run r = run({"recognize", h6});
  CHECK(r.code == cli::kOk);
  CHECK(contains(r.out, "half-graph: yes (k=6)"));
  CHECK(contains(r.out, "graph6: " + h6));
  CHECK(contains(run({"recognize", to_graph6(oracle::path(4))}).out, "half-graph: yes (k=2)"));
  CHECK(contains(run({"recognize", to_graph6(oracle::complete(4))}).out, "half-graph: no"));

  const std::string u = to_graph6(disjoint_union(half_graph(2), oracle::complete(3)));
  const Run d = run({"recognize", u});
  CHECK(contains(d.out, "components: 2"));
  CHECK(contains(d.out, "component 0 (order 4): half-graph k=2"));
  CHECK(contains(d.out, "component 1 (order 3): not a half-graph"));
  CHECK(contains(d.out, "union of half-graphs: no"));

  const auto j = nlohmann::json::parse(run({"recognize", u, "--format", "structured"}).out);
  CHECK(j["union_of_half_graphs"] == false);
  CHECK(j["components"][1]["vertices"] == nlohmann::json::array({4, 5, 6}));
}

TEST_CASE("verify") {
  const Run r4 = run({"verify", "--n", "4"});
  CHECK(r4.code == cli::kOk);
  CHECK(contains(r4.out, "extremal (gamma = n): 1"));
  CHECK(contains(r4.out, "theorem: holds"));

  const Run r7 = run({"verify", "--n", "7", "--jobs", "2", "--format", "structured"});
  CHECK(r7.code == cli::kOk);
  const auto j = nlohmann::json::parse(r7.out);
  CHECK(j["extremal"].empty());
  CHECK(j["graphs_scanned"] == 853);

  CHECK(run({"verify", "--n", "9"}).code == cli::kUsage);
  CHECK(run({"verify"}).code == cli::kUsage);
}

TEST_CASE("verify over a stream, with a report file") {
  std::string stream;
  for (unsigned k : {1U, 2U}) stream += to_graph6(half_graph(k)) + "\n";
  const auto report = std::filesystem::temp_directory_path() / "oldtool_report.json";
  const Run r = run({"verify", "--n", "4", "--stream", "-", "--report", report.string()}, stream);
  CHECK(r.code == cli::kParse);  // the H_1 line has the wrong order
  CHECK(contains(r.out, "rejected line 1"));
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["graphs_scanned"] == 1);
  CHECK(j["extremal"].size() == 1);
  std::filesystem::remove(report);

  const auto g6 = std::filesystem::temp_directory_path() / "oldtool_stream.g6";
  std::ofstream(g6) << to_graph6(half_graph(2)) << "\n" << to_graph6(oracle::path(4)) << "\n";
  const Run s = run({"verify", "--n", "4", "--stream", g6.string()});
  CHECK(s.code == cli::kOk);
  std::filesystem::remove(g6);
  CHECK(run({"verify", "--n", "9", "--stream", "/nonexistent/x.g6"}).code == cli::kUsage);
}
