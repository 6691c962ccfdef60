#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "oldsets/vertex_set.hpp"

namespace oldsets {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset rows.
///
/// Immutable once built: every constructor validates input, so the
/// adjacency is always symmetric and loop-free.
class Graph {
public:
  /// Order-0 graph.
  Graph() = default;

  /// Throws GraphError on a self-loop, an endpoint >= n, or n > kMaxOrder.
  /// Duplicate pairs collapse.
  static Graph from_edges(unsigned n, std::span<const Edge> edges);
  static Graph from_edges(unsigned n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from raw rows after checking symmetry and irreflexivity.
  static Graph from_rows(std::span<const VertexSet> rows);

  unsigned order() const { return n_; }
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  /// Open neighbourhood N(v). Throws GraphError if v is out of range.
  VertexSet neighbours(Vertex v) const;
  /// Unchecked row access for inner loops.
  VertexSet row(Vertex v) const { return adj_[v]; }

  unsigned degree(Vertex v) const { return neighbours(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return u < n_ && v < n_ && adj_[u].contains(v); }
  unsigned edge_count() const;
  /// Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

private:
  unsigned n_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

/// Alias of Graph::neighbours, kept for call sites reading like set algebra.
inline VertexSet open_neighbourhood(const Graph& g, Vertex v) { return g.neighbours(v); }

/// All unordered pairs {u, v}, u < v, with N(u) = N(v), in lexicographic order.
std::vector<Edge> open_twins(const Graph& g);

/// No isolated vertices and no open twins.
bool is_locatable(const Graph& g);

/// True for n <= 1 or when every vertex is reachable from vertex 0.
bool is_connected(const Graph& g);

/// Vertices reachable from `start`.
VertexSet reachable_from(const Graph& g, Vertex start);

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in increasing order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  ///< to_parent[i] is the parent vertex of local vertex i.
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Components ordered by their least vertex.
std::vector<InducedSubgraph> connected_components(const Graph& g);

/// G1 followed by G2 shifted by |G1|. Throws GraphError if the combined order exceeds kMaxOrder.
Graph disjoint_union(const Graph& g1, const Graph& g2);

/// Graph with edge {perm[u], perm[v]} for every edge {u, v} of g. `perm` must be a permutation.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph complement(const Graph& g);

}  // namespace oldsets
