#pragma once

#include <optional>
#include <vector>

#include "oldsets/graph.hpp"

namespace oldsets {

/// Certificate that a graph is H_k: v_order[i] ~ w_order[j] iff i <= j (0-based here).
struct HalfGraphLabeling {
  unsigned k = 0;
  std::vector<Vertex> v_order;
  std::vector<Vertex> w_order;
};

/// H_k with v_1..v_k at 0..k-1 and w_1..w_k at k..2k-1.
/// Throws PreconditionError for k = 0 or 2k > kMaxOrder.
Graph half_graph(unsigned k);

/// Labeling of H_k (k = n/2) recovered from g, or empty if g is not a half-graph.
/// Disconnected graphs are always rejected; see is_union_of_half_graphs.
std::optional<HalfGraphLabeling> is_half_graph(const Graph& g);

/// The labeling satisfies the edge law exactly and partitions V(g).
bool verify_labeling(const Graph& g, const HalfGraphLabeling& labeling);

bool is_union_of_half_graphs(const Graph& g);

/// One inductive reduction: a pendant vertex y, its neighbour x and a vertex
/// z != x with N(x) = N(z) | {y}. `graph` is g minus {x, y}.
struct PeelResult {
  Graph graph;
  Vertex x = 0;
  Vertex y = 0;
  Vertex z = 0;
  std::vector<Vertex> to_parent;
};

/// Picks the qualifying pair with least y, then least z. Requires g locatable,
/// connected and of order >= 4 (PreconditionError otherwise).
std::optional<PeelResult> peel(const Graph& g);

}  // namespace oldsets
