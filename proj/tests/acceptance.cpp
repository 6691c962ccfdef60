// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oldsets/canonical.hpp"
#include "oldsets/errors.hpp"
#include "oldsets/forced.hpp"
#include "oldsets/graph6.hpp"
#include "oldsets/half_graph.hpp"
#include "oldsets/harness.hpp"
#include "oldsets/old_sets.hpp"
#include "support/oracles.hpp"

using namespace oldsets;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = seconds_since(start);
  if (!o.pass) ++failures;
  std::printf("[%s] %s %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.detail.str().empty() ? "" : " -- ", o.detail.str().c_str());
  std::fflush(stdout);
}

Graph random_locatable(std::mt19937_64& rng, unsigned n, double p) {
  for (;;) {
    Graph g = oracle::random_graph(rng, n, p);
    if (is_locatable(g)) return g;
  }
}

}  // namespace

int main() {
  criterion("AC1", "gamma(H_k) = 2k for k = 1..6, each solve <= 1 s", [](Outcome& o) {
    for (unsigned k = 1; k <= 6; ++k) {
      const auto t = Clock::now();
      const SolveResult r = old_number(half_graph(k));
      const double secs = seconds_since(t);
      o.require(r.gamma == 2 * k, "gamma(H_" + std::to_string(k) + ") = " + std::to_string(r.gamma));
      o.require(secs <= 1.0, "H_" + std::to_string(k) + " took " + std::to_string(secs) + " s");
      o.require(is_old_set(half_graph(k), r.witness), "witness of H_" + std::to_string(k) + " not OLD");
    }
  });

  criterion("AC2", "forced structure of H_k for k = 2..6", [](Outcome& o) {
    for (unsigned k = 2; k <= 6; ++k) {
      const Graph h = half_graph(k);
      // Construction labeling: v_i = i-1, w_j = k+j-1.
      const VertexSet dom_expect = VertexSet::singleton(0) | VertexSet::singleton(2 * k - 1);
      VertexSet loc_expect;
      for (unsigned j = 1; j <= k - 1; ++j) loc_expect.insert(k + j - 1);
      for (unsigned i = 2; i <= k; ++i) loc_expect.insert(i - 1);
      const auto c = classify_forced(h);
      o.require(c.domination.vertices == dom_expect, "domination-forced of H_" + std::to_string(k) + " = " +
                                                         to_string(c.domination.vertices));
      o.require(c.location.vertices == loc_expect, "location-forced of H_" + std::to_string(k) + " = " +
                                                       to_string(c.location.vertices));
    }
  });

  criterion("AC3", "gamma = n iff half-graph, all connected graphs 2 <= n <= 8, under 300 s", [](Outcome& o) {
    const auto start = Clock::now();
    for (unsigned n = 2; n <= 8; ++n) {
      const auto graphs = enumerate_connected_graphs(n);
      const HarnessReport r = run_harness(graphs, n, {.check_bondy = false, .check_proposition2 = false, .jobs = 0});
      const std::string tag = "n=" + std::to_string(n);
      o.require(r.theorem_holds && r.counterexamples.empty(), tag + ": counterexamples found");
      o.require(r.proposition2_violations.empty(), tag + ": extremal graph with an unforced vertex");
      if (n % 2 == 0) {
        o.require(r.extremal == std::vector<std::string>{canonical_form(half_graph(n / 2))},
                  tag + ": extremal classes = " + std::to_string(r.extremal.size()));
      } else {
        o.require(r.extremal.empty(), tag + ": odd order has extremal graphs");
      }
      for (const auto& code : r.extremal) {
        const Graph g = parse_graph6(code);
        o.require(old_number(g).gamma == n && is_half_graph(g), tag + ": extremal record fails re-check");
      }
      std::printf("      n=%u: %zu connected, %llu locatable, %zu extremal, %.2f s\n", n, graphs.size(),
                  static_cast<unsigned long long>(r.locatable_count), r.extremal.size(), r.seconds);
    }
    o.require(seconds_since(start) < 300.0, "exceeded 300 s");
  });

  criterion("AC4", "base cases: gamma(K_2) = 2, gamma(K_3) = 2, order 1 not locatable", [](Outcome& o) {
    o.require(old_number(half_graph(1)).gamma == 2, "gamma(K_2)");
    o.require(old_number_bruteforce(half_graph(1)).gamma == 2, "gamma(K_2) exhaustive");
    o.require(old_number(oracle::complete(3)).gamma == 2, "gamma(K_3)");
    o.require(old_number_bruteforce(oracle::complete(3)).gamma == 2, "gamma(K_3) exhaustive");
    const Graph k1 = Graph::from_edges(1, {});
    o.require(!is_locatable(k1), "K_1 reported locatable");
    bool threw = false;
    try {
      (void)old_number(k1);
    } catch (const NotLocatableError&) {
      threw = true;
    }
    o.require(threw, "old_number(K_1) did not raise NotLocatableError");
  });

  criterion("AC5", "location-forced count <= n-1 on every locatable connected graph, n <= 7", [](Outcome& o) {
    for (unsigned n = 1; n <= 7; ++n) {
      const HarnessReport r = run_harness(enumerate_connected_graphs(n), n,
                                          {.check_theorem = false, .check_bondy = true, .check_proposition2 = false, .jobs = 0});
      o.require(r.bondy_violations.empty(), "n=" + std::to_string(n) + ": violations");
      if (r.locatable_count > 0) o.require(r.max_location_forced <= n - 1, "n=" + std::to_string(n) + ": max too large");
    }
  });

  criterion("AC6", "V - {v} is OLD for every unforced v, locatable connected graphs n <= 7", [](Outcome& o) {
    std::size_t removals = 0;
    for (unsigned n = 1; n <= 7; ++n) {
      const auto graphs = enumerate_connected_graphs(n);
      const HarnessReport r = run_harness(graphs, n,
                                          {.check_theorem = false, .check_bondy = false, .check_proposition2 = true, .jobs = 0});
      o.require(r.proposition2_violations.empty(), "n=" + std::to_string(n) + ": violations");
      for (const Graph& g : graphs) {
        if (is_locatable(g)) removals += classify_forced(g).unforced.size();
      }
    }
    o.require(removals > 0, "no unforced vertices were exercised");
    std::printf("      %zu unforced-vertex removals checked\n", removals);
  });

  criterion("AC7", "branch-and-bound equals exhaustive search (n <= 6 all, 500 random n in {7,8})", [](Outcome& o) {
    std::size_t all = 0;
    for (unsigned n = 2; n <= 6; ++n) {
      for (const Graph& g : enumerate_connected_graphs(n)) {
        if (!is_locatable(g)) continue;
        const SolveResult a = old_number(g);
        const SolveResult b = old_number_bruteforce(g);
        o.require(a.gamma == b.gamma && a.witness == b.witness, "mismatch on " + to_graph6(g));
        ++all;
      }
    }
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 500; ++t) {
      const unsigned n = 7 + static_cast<unsigned>(t % 2);
      const Graph g = random_locatable(rng, n, 0.2 + 0.6 * static_cast<double>(t % 10) / 9.0);
      const SolveResult a = old_number(g);
      const SolveResult b = old_number_bruteforce(g);
      o.require(a.gamma == b.gamma && a.witness == b.witness, "mismatch on " + to_graph6(g));
    }
    std::printf("      %zu exhaustive + 500 random graphs compared\n", all);
  });

  criterion("AC8", "peel(H_k) is isomorphic to H_{k-1} for k = 2..8", [](Outcome& o) {
    for (unsigned k = 2; k <= 8; ++k) {
      const auto p = peel(half_graph(k));
      o.require(p.has_value(), "peel(H_" + std::to_string(k) + ") found no pair");
      if (p) {
        o.require(canonical_form(p->graph) == canonical_form(half_graph(k - 1)),
                  "peel(H_" + std::to_string(k) + ") not isomorphic to H_" + std::to_string(k - 1));
      }
    }
  });

  criterion("AC9", "gamma is additive over 100 random disjoint unions", [](Outcome& o) {
    std::mt19937_64 rng(4242);
    for (int t = 0; t < 100; ++t) {
      const Graph a = random_locatable(rng, 2 + static_cast<unsigned>(rng() % 7), 0.5);
      const Graph b = random_locatable(rng, 2 + static_cast<unsigned>(rng() % 7), 0.5);
      const Graph u = disjoint_union(a, b);
      const unsigned sum = old_number(a).gamma + old_number(b).gamma;
      const SolveResult split = old_number_disconnected(u);
      o.require(split.gamma == sum, "additivity on " + to_graph6(u));
      o.require(old_number(u).gamma == sum, "whole-graph solve on " + to_graph6(u));
      o.require(is_old_set(u, split.witness), "union witness not OLD on " + to_graph6(u));
    }
  });

  criterion("AC10", "graph6 round trip on every labelled graph with n <= 7", [](Outcome& o) {
    std::size_t count = 0;
    for (unsigned n = 0; n <= 7; ++n) {
      const unsigned pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        const Graph g = oracle::labeled_graph(n, mask);
        const std::string rec = to_graph6(g);
        const Graph back = parse_graph6(rec);
        if (!(back == g) || to_graph6(back) != rec) {
          o.require(false, "round trip failed for " + rec);
          return;
        }
        ++count;
      }
    }
    std::printf("      %zu records\n", count);
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
