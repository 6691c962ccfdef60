#include "oldsets/half_graph.hpp"

#include <algorithm>
#include <string>

#include "oldsets/errors.hpp"

namespace oldsets {

Graph half_graph(unsigned k) {
  if (k == 0) throw PreconditionError("half-graph index must be at least 1");
  if (2 * k > kMaxOrder) throw PreconditionError("half-graph H_" + std::to_string(k) + " exceeds the order limit");
  std::vector<Edge> edges;
  edges.reserve(k * (k + 1) / 2);
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i; j < k; ++j) edges.emplace_back(i, k + j);
  }
  return Graph::from_edges(2 * k, edges);
}

bool verify_labeling(const Graph& g, const HalfGraphLabeling& lab) {
  const unsigned k = lab.k;
  if (k == 0 || lab.v_order.size() != k || lab.w_order.size() != k || g.order() != 2 * k) return false;
  VertexSet seen;
  for (const auto* seq : {&lab.v_order, &lab.w_order}) {
    for (Vertex v : *seq) {
      if (v >= g.order() || seen.contains(v)) return false;
      seen.insert(v);
    }
  }
  // Each part must also be independent for the edge law to describe all of E(g).
  VertexSet vs;
  VertexSet ws;
  for (Vertex v : lab.v_order) vs.insert(v);
  for (Vertex w : lab.w_order) ws.insert(w);
  for (unsigned i = 0; i < k; ++i) {
    if (!(g.row(lab.v_order[i]) & vs).empty() || !(g.row(lab.w_order[i]) & ws).empty()) return false;
    for (unsigned j = 0; j < k; ++j) {
      if (g.adjacent(lab.v_order[i], lab.w_order[j]) != (i <= j)) return false;
    }
  }
  return true;
}

namespace {

// Orders `part` so that degrees run k, k-1, ..., 1 and `other` so that they
// run 1, ..., k. Fails unless each part has degrees exactly {1..k}.
std::optional<HalfGraphLabeling> assign_roles(const Graph& g, VertexSet v_part, VertexSet w_part, unsigned k) {
  HalfGraphLabeling lab;
  lab.k = k;
  lab.v_order.assign(k, 0);
  lab.w_order.assign(k, 0);
  VertexSet v_slots;
  VertexSet w_slots;
  for (Vertex v : v_part) {
    const unsigned d = g.row(v).size();
    if (d < 1 || d > k || v_slots.contains(k - d)) return std::nullopt;
    v_slots.insert(k - d);
    lab.v_order[k - d] = v;
  }
  for (Vertex w : w_part) {
    const unsigned d = g.row(w).size();
    if (d < 1 || d > k || w_slots.contains(d - 1)) return std::nullopt;
    w_slots.insert(d - 1);
    lab.w_order[d - 1] = w;
  }
  if (!verify_labeling(g, lab)) return std::nullopt;
  return lab;
}

}  // namespace

std::optional<HalfGraphLabeling> is_half_graph(const Graph& g) {
  const unsigned n = g.order();
  if (n < 2 || n % 2 != 0 || !is_connected(g)) return std::nullopt;
  const unsigned k = n / 2;

  // Two-colour by BFS layers from vertex 0.
  VertexSet side = VertexSet::singleton(0);
  VertexSet other;
  VertexSet frontier = side;
  VertexSet seen = side;
  bool even_layer = true;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.row(v);
    next -= seen;
    even_layer = !even_layer;
    (even_layer ? side : other) |= next;
    seen |= next;
    frontier = next;
  }
  for (Vertex v : side) {
    if (!(g.row(v) & side).empty()) return std::nullopt;
  }
  for (Vertex v : other) {
    if (!(g.row(v) & other).empty()) return std::nullopt;
  }
  if (side.size() != k || other.size() != k) return std::nullopt;

  if (auto lab = assign_roles(g, side, other, k)) return lab;
  return assign_roles(g, other, side, k);
}

bool is_union_of_half_graphs(const Graph& g) {
  return std::ranges::all_of(connected_components(g),
                             [](const InducedSubgraph& c) { return is_half_graph(c.graph).has_value(); });
}

std::optional<PeelResult> peel(const Graph& g) {
  if (g.order() < 4) throw PreconditionError("peel needs order at least 4");
  if (!is_connected(g)) throw PreconditionError("peel needs a connected graph");
  if (!is_locatable(g)) throw PreconditionError("peel needs a locatable graph");

  for (Vertex y = 0; y < g.order(); ++y) {
    if (g.row(y).size() != 1) continue;
    const Vertex x = g.row(y).front();
    const VertexSet y_set = VertexSet::singleton(y);
    for (Vertex z = 0; z < g.order(); ++z) {
      if (z == x || (g.row(z) | y_set) != g.row(x)) continue;
      auto sub = induced_subgraph(g, g.vertices() - y_set - VertexSet::singleton(x));
      return PeelResult{std::move(sub.graph), x, y, z, std::move(sub.to_parent)};
    }
  }
  return std::nullopt;
}

}  // namespace oldsets
