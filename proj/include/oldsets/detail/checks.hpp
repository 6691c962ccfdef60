#pragma once

#include "oldsets/graph.hpp"

namespace oldsets::detail {

/// Throws NotLocatableError naming the first isolated vertex or twin pair.
void require_locatable(const Graph& g);

}  // namespace oldsets::detail
