#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oldsets/graph.hpp"
#include "oldsets/graph6.hpp"
#include "oldsets/old_sets.hpp"

namespace oldsets {

/// Largest order the built-in enumerator produces; beyond it, feed graph6 streams.
inline constexpr unsigned kMaxEnumerationOrder = 8;

/// One canonical representative per isomorphism class of connected graphs of
/// order n, sorted by canonical form. Built by extending every class of order
/// n-1 with a new vertex; every connected graph has a non-cut vertex, so
/// nothing is missed. Throws PreconditionError unless 1 <= n <= 8.
std::vector<Graph> enumerate_connected_graphs(unsigned n);

/// Locatable graph where [gamma = n] disagrees with [is half-graph].
struct Counterexample {
  std::string graph6;
  unsigned gamma = 0;
  bool half_graph = false;
  auto operator<=>(const Counterexample&) const = default;
};

struct BondyViolation {
  std::string graph6;
  unsigned location_forced = 0;
  auto operator<=>(const BondyViolation&) const = default;
};

/// An unforced vertex whose removal does not leave an OLD set, or (vertex
/// absent) an extremal graph that still has unforced vertices.
struct Proposition2Violation {
  std::string graph6;
  std::optional<Vertex> vertex;
  auto operator<=>(const Proposition2Violation&) const = default;
};

/// Input record that could not be checked.
struct RejectedRecord {
  std::size_t line = 0;
  std::string record;
  std::string reason;
  auto operator<=>(const RejectedRecord&) const = default;
};

struct HarnessOptions {
  bool check_theorem = true;
  bool check_bondy = true;
  bool check_proposition2 = true;
  SolveMethod solver = SolveMethod::BranchAndBound;
  unsigned jobs = 1;  ///< 0 picks the hardware thread count.
};

/// All lists are sorted and graphs are identified by canonical graph6, so a
/// report does not depend on input order, labelling or scheduling.
struct HarnessReport {
  unsigned order = 0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t locatable_count = 0;
  std::vector<std::string> extremal;
  bool theorem_holds = true;
  std::vector<Counterexample> counterexamples;
  std::vector<BondyViolation> bondy_violations;
  std::vector<Proposition2Violation> proposition2_violations;
  std::vector<RejectedRecord> rejected;
  unsigned max_location_forced = 0;
  double seconds = 0.0;
  HarnessOptions options;

  /// Theorem holds and no check reported a violation.
  bool ok() const {
    return theorem_holds && bondy_violations.empty() && proposition2_violations.empty();
  }
};

HarnessReport run_harness(std::span<const Graph> graphs, unsigned n, const HarnessOptions& options = {});

/// Parses each record; malformed ones, wrong orders and disconnected graphs
/// go to `rejected` and the rest are checked.
HarnessReport run_harness(std::span<const Graph6Line> records, unsigned n, const HarnessOptions& options = {});

HarnessReport verify_theorem(std::span<const Graph> graphs, unsigned n, unsigned jobs = 1);
HarnessReport verify_bondy(std::span<const Graph> graphs, unsigned n, unsigned jobs = 1);
HarnessReport verify_proposition2(std::span<const Graph> graphs, unsigned n, unsigned jobs = 1);

/// Human-readable summary, including wall time.
std::string format_text(const HarnessReport& report);

/// Machine-readable dump with sorted keys and no timing field, so identical
/// inputs give identical bytes.
std::string format_structured(const HarnessReport& report);

}  // namespace oldsets
