#include "oldsets/graph.hpp"

#include <algorithm>
#include <string>

#include "oldsets/errors.hpp"

namespace oldsets {

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

Graph Graph::from_edges(unsigned n, std::span<const Edge> edges) {
  if (n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  const auto n = static_cast<unsigned>(rows.size());
  if (n > kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
  Graph g;
  g.n_ = n;
  const VertexSet all = VertexSet::prefix(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all)) throw GraphError("row " + std::to_string(v) + " leaves the vertex range");
    if (rows[v].contains(v)) throw GraphError("self-loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) throw GraphError("asymmetric rows at " + std::to_string(u) + "," + std::to_string(v));
    }
    g.adj_[v] = rows[v];
  }
  return g;
}

VertexSet Graph::neighbours(Vertex v) const {
  if (v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  return adj_[v];
}

unsigned Graph::edge_count() const {
  unsigned twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += adj_[v].size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u] - VertexSet::prefix(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

std::vector<Edge> open_twins(const Graph& g) {
  std::vector<Edge> twins;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.row(u) == g.row(v)) twins.emplace_back(u, v);
    }
  }
  return twins;
}

bool is_locatable(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.row(v).empty()) return false;
  }
  return open_twins(g).empty();
}

VertexSet reachable_from(const Graph& g, Vertex start) {
  VertexSet seen = VertexSet::singleton(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.row(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  return reachable_from(g, 0) == g.vertices();
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  InducedSubgraph sub;
  std::array<Vertex, kMaxOrder> local{};
  for (Vertex v : keep & g.vertices()) {
    local[v] = static_cast<Vertex>(sub.to_parent.size());
    sub.to_parent.push_back(v);
  }
  std::vector<VertexSet> rows(sub.to_parent.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Vertex u : g.row(sub.to_parent[i]) & keep) rows[i].insert(local[u]);
  }
  sub.graph = Graph::from_rows(rows);
  return sub;
}

std::vector<InducedSubgraph> connected_components(const Graph& g) {
  std::vector<InducedSubgraph> out;
  VertexSet left = g.vertices();
  while (!left.empty()) {
    const VertexSet comp = reachable_from(g, left.front());
    out.push_back(induced_subgraph(g, comp));
    left -= comp;
  }
  return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const unsigned n1 = g1.order();
  if (n1 + g2.order() > kMaxOrder) {
    throw GraphError("disjoint union of order " + std::to_string(n1 + g2.order()) + " exceeds " +
                     std::to_string(kMaxOrder));
  }
  std::vector<VertexSet> rows;
  rows.reserve(n1 + g2.order());
  for (Vertex v = 0; v < n1; ++v) rows.push_back(g1.row(v));
  for (Vertex v = 0; v < g2.order(); ++v) rows.push_back(VertexSet(g2.row(v).bits() << n1));
  return Graph::from_rows(rows);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  const unsigned n = g.order();
  if (perm.size() != n) throw GraphError("permutation length does not match graph order");
  VertexSet image;
  for (Vertex p : perm) {
    if (p >= n || image.contains(p)) throw GraphError("relabelling is not a permutation");
    image.insert(p);
  }
  std::vector<VertexSet> rows(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.row(u)) rows[perm[u]].insert(perm[v]);
  }
  return Graph::from_rows(rows);
}

Graph complement(const Graph& g) {
  std::vector<VertexSet> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    rows[v] = g.vertices() - g.row(v) - VertexSet::singleton(v);
  }
  return Graph::from_rows(rows);
}

}  // namespace oldsets
