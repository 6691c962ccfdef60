#pragma once

#include <cstdint>
#include <string_view>

#include "oldsets/graph.hpp"

namespace oldsets {

enum class SolveMethod { BruteForce, BranchAndBound };

std::string_view to_string(SolveMethod m);

struct SolveResult {
  unsigned gamma = 0;             ///< Minimum OLD-set size.
  VertexSet witness;              ///< Optimal set with the least bitmask value.
  std::uint64_t nodes_explored = 0;
  SolveMethod method = SolveMethod::BranchAndBound;
};

/// Every vertex has a neighbour in s.
bool is_total_dominating(const Graph& g, VertexSet s);

/// s is total dominating and the traces N(v) & s are pairwise distinct.
bool is_old_set(const Graph& g, VertexSet s);

/// No other vertex shares v's trace on s. Throws GraphError if v is out of range.
bool locates(const Graph& g, VertexSet s, Vertex v);

/// Orders above this are refused by the exhaustive solver.
inline constexpr unsigned kBruteForceLimit = 32;

/// Scans subsets by increasing size, each size in increasing bitmask order.
/// nodes_explored counts the subsets tested.
/// Throws NotLocatableError, or PreconditionError above kBruteForceLimit.
SolveResult old_number_bruteforce(const Graph& g);

/// Branch-and-bound seeded with the forced vertices. Returns the same gamma
/// and witness as old_number_bruteforce. Throws NotLocatableError.
SolveResult old_number(const Graph& g);

/// Solves each connected component separately and sums the results;
/// witnesses are mapped back to g's labels. Throws NotLocatableError.
SolveResult old_number_disconnected(const Graph& g);

}  // namespace oldsets
