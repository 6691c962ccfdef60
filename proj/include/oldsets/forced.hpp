#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "oldsets/graph.hpp"

namespace oldsets {

/// Vertices v with N(w) = {v} for some w. witness[v] holds the least such w.
struct DominationForced {
  VertexSet vertices;
  std::vector<std::optional<Vertex>> witness;
};

/// Vertices v with N(x) ^ N(y) = {v} for some x < y. witness[v] holds the
/// lexicographically least such pair.
struct LocationForced {
  VertexSet vertices;
  std::vector<std::optional<Edge>> witness;
};

struct ForcedClassification {
  DominationForced domination;
  LocationForced location;
  VertexSet unforced;  ///< Complement of domination.vertices | location.vertices.

  VertexSet forced() const { return domination.vertices | location.vertices; }
};

DominationForced domination_forced(const Graph& g);
LocationForced location_forced(const Graph& g);
ForcedClassification classify_forced(const Graph& g);

/// Least unforced vertex, whose removal leaves an OLD set; empty when every
/// vertex is forced. Throws NotLocatableError.
std::optional<Vertex> removable_vertex(const Graph& g);

/// Number of location-forced vertices, at most n-1 on locatable graphs.
/// Throws NotLocatableError.
unsigned bondy_check(const Graph& g);

}  // namespace oldsets
