#include "oldsets/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "oldsets/canonical.hpp"
#include "oldsets/errors.hpp"
#include "oldsets/forced.hpp"
#include "oldsets/half_graph.hpp"

namespace oldsets {

std::vector<Graph> enumerate_connected_graphs(unsigned n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw PreconditionError("built-in enumeration supports orders 1.." + std::to_string(kMaxEnumerationOrder) +
                            "; supply a graph6 stream for order " + std::to_string(n));
  }
  std::vector<Graph> level{Graph::from_edges(1, {})};
  for (unsigned m = 2; m <= n; ++m) {
    std::set<std::string> seen;
    const Vertex added = m - 1;
    for (const Graph& base : level) {
      std::vector<VertexSet> rows(m);
      for (Vertex v = 0; v < added; ++v) rows[v] = base.row(v);
      for (VertexSet::Word mask = 1; mask < (VertexSet::Word{1} << added); ++mask) {
        const VertexSet attach(mask);
        for (Vertex v = 0; v < added; ++v) {
          rows[v] = attach.contains(v) ? base.row(v) | VertexSet::singleton(added) : base.row(v);
        }
        rows[added] = attach;
        seen.insert(canonical_form(Graph::from_rows(rows)));
      }
    }
    level.clear();
    level.reserve(seen.size());
    for (const auto& code : seen) level.push_back(parse_graph6(code));
  }
  return level;
}

namespace {

struct Outcome {
  bool locatable = false;
  std::optional<std::string> extremal;
  std::optional<Counterexample> counterexample;
  std::optional<BondyViolation> bondy;
  std::vector<Proposition2Violation> prop2;
  unsigned location_forced = 0;
};

std::string identity_code(const Graph& g) {
  return g.order() <= kCanonicalLimit ? canonical_form(g) : to_graph6(g);
}

Outcome examine(const Graph& g, const HarnessOptions& opt) {
  Outcome out;
  const unsigned n = g.order();
  out.locatable = is_locatable(g);
  const std::string code = identity_code(g);
  if (!out.locatable) {
    if (opt.check_theorem && is_half_graph(g)) out.counterexample = Counterexample{code, 0, true};
    return out;
  }

  const ForcedClassification forced = classify_forced(g);
  out.location_forced = forced.location.vertices.size();

  if (opt.check_theorem) {
    const SolveResult solved = opt.solver == SolveMethod::BruteForce ? old_number_bruteforce(g) : old_number(g);
    const bool extremal = solved.gamma == n;
    const bool half = is_half_graph(g).has_value();
    if (extremal) out.extremal = code;
    if (extremal != half) out.counterexample = Counterexample{code, solved.gamma, half};
    if (extremal && !forced.unforced.empty()) out.prop2.push_back({code, std::nullopt});
  }
  if (opt.check_bondy && n > 0 && out.location_forced > n - 1) {
    out.bondy = BondyViolation{code, out.location_forced};
  }
  if (opt.check_proposition2) {
    for (Vertex v : forced.unforced) {
      if (!is_old_set(g, g.vertices() - VertexSet::singleton(v))) out.prop2.push_back({code, v});
    }
  }
  return out;
}

std::vector<Outcome> examine_all(std::span<const Graph> graphs, const HarnessOptions& opt) {
  std::vector<Outcome> outcomes(graphs.size());
  unsigned jobs = opt.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : opt.jobs;
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(graphs.size(), 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) outcomes[i] = examine(graphs[i], opt);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < graphs.size(); i = next++) outcomes[i] = examine(graphs[i], opt);
    });
  }
  pool.clear();
  return outcomes;
}

HarnessReport aggregate(std::vector<Outcome> outcomes, unsigned n, const HarnessOptions& opt) {
  HarnessReport r;
  r.order = n;
  r.options = opt;
  r.graphs_scanned = outcomes.size();
  for (auto& o : outcomes) {
    if (o.locatable) ++r.locatable_count;
    if (o.extremal) r.extremal.push_back(std::move(*o.extremal));
    if (o.counterexample) r.counterexamples.push_back(std::move(*o.counterexample));
    if (o.bondy) r.bondy_violations.push_back(std::move(*o.bondy));
    for (auto& p : o.prop2) r.proposition2_violations.push_back(std::move(p));
    r.max_location_forced = std::max(r.max_location_forced, o.location_forced);
  }
  std::sort(r.extremal.begin(), r.extremal.end());
  std::sort(r.counterexamples.begin(), r.counterexamples.end());
  std::sort(r.bondy_violations.begin(), r.bondy_violations.end());
  std::sort(r.proposition2_violations.begin(), r.proposition2_violations.end());
  r.theorem_holds = r.counterexamples.empty();
  return r;
}

double elapsed(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

HarnessReport run_harness(std::span<const Graph> graphs, unsigned n, const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> accepted;
  std::vector<RejectedRecord> rejected;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (graphs[i].order() != n) {
      rejected.push_back({i + 1, to_graph6(graphs[i]), "order " + std::to_string(graphs[i].order()) + " != " + std::to_string(n)});
    } else if (!is_connected(graphs[i])) {
      rejected.push_back({i + 1, to_graph6(graphs[i]), "disconnected"});
    } else {
      accepted.push_back(graphs[i]);
    }
  }
  HarnessReport r = aggregate(examine_all(accepted, options), n, options);
  r.rejected = std::move(rejected);
  std::sort(r.rejected.begin(), r.rejected.end());
  r.seconds = elapsed(start);
  return r;
}

HarnessReport run_harness(std::span<const Graph6Line> records, unsigned n, const HarnessOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Graph> accepted;
  std::vector<RejectedRecord> rejected;
  for (const auto& rec : records) {
    try {
      Graph g = parse_graph6(rec.record);
      if (g.order() != n) {
        rejected.push_back({rec.line_number, rec.record, "order " + std::to_string(g.order()) + " != " + std::to_string(n)});
      } else if (!is_connected(g)) {
        rejected.push_back({rec.line_number, rec.record, "disconnected"});
      } else {
        accepted.push_back(std::move(g));
      }
    } catch (const std::exception& e) {
      rejected.push_back({rec.line_number, rec.record, e.what()});
    }
  }
  HarnessReport r = aggregate(examine_all(accepted, options), n, options);
  r.rejected = std::move(rejected);
  std::sort(r.rejected.begin(), r.rejected.end());
  r.seconds = elapsed(start);
  return r;
}

HarnessReport verify_theorem(std::span<const Graph> graphs, unsigned n, unsigned jobs) {
  return run_harness(graphs, n, {.check_theorem = true, .check_bondy = false, .check_proposition2 = false, .jobs = jobs});
}

HarnessReport verify_bondy(std::span<const Graph> graphs, unsigned n, unsigned jobs) {
  return run_harness(graphs, n, {.check_theorem = false, .check_bondy = true, .check_proposition2 = false, .jobs = jobs});
}

HarnessReport verify_proposition2(std::span<const Graph> graphs, unsigned n, unsigned jobs) {
  return run_harness(graphs, n, {.check_theorem = false, .check_bondy = false, .check_proposition2 = true, .jobs = jobs});
}

std::string format_text(const HarnessReport& r) {
  std::ostringstream os;
  os << "order " << r.order << ": scanned " << r.graphs_scanned << ", locatable " << r.locatable_count
     << ", rejected " << r.rejected.size() << '\n';
  if (r.options.check_theorem) {
    os << "extremal (gamma = n): " << r.extremal.size() << '\n';
    for (const auto& e : r.extremal) os << "  " << e << '\n';
    os << "counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& c : r.counterexamples) {
      os << "  " << c.graph6 << " gamma=" << c.gamma << " half_graph=" << (c.half_graph ? "yes" : "no") << '\n';
    }
    os << "theorem: " << (r.theorem_holds ? "holds" : "VIOLATED") << '\n';
  }
  if (r.options.check_bondy) {
    os << "location-forced bound: max " << r.max_location_forced << ", violations " << r.bondy_violations.size()
       << '\n';
    for (const auto& b : r.bondy_violations) os << "  " << b.graph6 << " count=" << b.location_forced << '\n';
  }
  if (r.options.check_proposition2 || r.options.check_theorem) {
    os << "unforced-removal violations: " << r.proposition2_violations.size() << '\n';
    for (const auto& p : r.proposition2_violations) {
      os << "  " << p.graph6 << (p.vertex ? " vertex=" + std::to_string(*p.vertex) : " extremal-with-unforced") << '\n';
    }
  }
  for (const auto& rej : r.rejected) os << "rejected line " << rej.line << " '" << rej.record << "': " << rej.reason << '\n';
  os << "time: " << r.seconds << " s\n";
  return os.str();
}

std::string format_structured(const HarnessReport& r) {
  using nlohmann::json;
  json j;
  j["order"] = r.order;
  j["graphs_scanned"] = r.graphs_scanned;
  j["locatable_count"] = r.locatable_count;
  j["checks"] = {{"theorem", r.options.check_theorem},
                 {"bondy", r.options.check_bondy},
                 {"proposition2", r.options.check_proposition2}};
  j["extremal"] = r.extremal;
  j["theorem_holds"] = r.theorem_holds;
  j["counterexamples"] = json::array();
  for (const auto& c : r.counterexamples) {
    j["counterexamples"].push_back({{"graph6", c.graph6}, {"gamma", c.gamma}, {"half_graph", c.half_graph}});
  }
  j["max_location_forced"] = r.max_location_forced;
  j["bondy_violations"] = json::array();
  for (const auto& b : r.bondy_violations) {
    j["bondy_violations"].push_back({{"graph6", b.graph6}, {"location_forced", b.location_forced}});
  }
  j["proposition2_violations"] = json::array();
  for (const auto& p : r.proposition2_violations) {
    json item{{"graph6", p.graph6}};
    item["vertex"] = p.vertex ? json(*p.vertex) : json(nullptr);
    j["proposition2_violations"].push_back(std::move(item));
  }
  j["rejected"] = json::array();
  for (const auto& rej : r.rejected) {
    j["rejected"].push_back({{"line", rej.line}, {"record", rej.record}, {"reason", rej.reason}});
  }
  j["ok"] = r.ok();
  return j.dump(2) + "\n";
}

}  // namespace oldsets
