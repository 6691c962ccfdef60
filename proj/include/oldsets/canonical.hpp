#pragma once

#include <string>
#include <vector>

#include "oldsets/graph.hpp"

namespace oldsets {

/// Default cap on canonicalization order.
inline constexpr unsigned kCanonicalLimit = 16;

/// Canonical relabelling: position i of the result holds the vertex of g
/// placed at index i. Throws PreconditionError if order exceeds `limit`.
std::vector<Vertex> canonical_labeling(const Graph& g, unsigned limit = kCanonicalLimit);

/// g relabelled by canonical_labeling.
Graph canonical_graph(const Graph& g, unsigned limit = kCanonicalLimit);

/// graph6 of canonical_graph(g). Equal strings iff the graphs are isomorphic.
std::string canonical_form(const Graph& g, unsigned limit = kCanonicalLimit);

bool isomorphic(const Graph& a, const Graph& b, unsigned limit = kCanonicalLimit);

}  // namespace oldsets
