#include "oldsets/forced.hpp"

#include "oldsets/detail/checks.hpp"

namespace oldsets {

DominationForced domination_forced(const Graph& g) {
  DominationForced out;
  out.witness.resize(g.order());
  for (Vertex w = 0; w < g.order(); ++w) {
    const VertexSet nw = g.row(w);
    if (nw.size() != 1) continue;
    const Vertex v = nw.front();
    if (!out.witness[v]) out.witness[v] = w;
    out.vertices.insert(v);
  }
  return out;
}

LocationForced location_forced(const Graph& g) {
  LocationForced out;
  out.witness.resize(g.order());
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      const VertexSet diff = g.row(x) ^ g.row(y);
      if (diff.size() != 1) continue;
      const Vertex v = diff.front();
      if (!out.witness[v]) out.witness[v] = Edge{x, y};
      out.vertices.insert(v);
    }
  }
  return out;
}

ForcedClassification classify_forced(const Graph& g) {
  ForcedClassification c{domination_forced(g), location_forced(g), {}};
  c.unforced = g.vertices() - c.forced();
  return c;
}

std::optional<Vertex> removable_vertex(const Graph& g) {
  detail::require_locatable(g);
  const VertexSet unforced = classify_forced(g).unforced;
  if (unforced.empty()) return std::nullopt;
  return unforced.front();
}

unsigned bondy_check(const Graph& g) {
  detail::require_locatable(g);
  return location_forced(g).vertices.size();
}

}  // namespace oldsets
