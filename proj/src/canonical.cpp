#include "oldsets/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "oldsets/errors.hpp"
#include "oldsets/graph6.hpp"

namespace oldsets {

namespace {

using Partition = std::vector<std::vector<Vertex>>;
// Row j holds the upper-triangle column j (bit j-1-i set when i ~ j), so
// comparing codes row by row compares graph6 bit strings.
using Code = std::vector<VertexSet::Word>;

// Splits cells by the count of neighbours in each cell until stable. Every
// step depends only on adjacency and the current cell order, so the result
// commutes with isomorphisms.
void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<VertexSet> masks(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) masks[c].insert(v);
    }
    Partition next;
    next.reserve(g.order());
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<unsigned>, Vertex>> keyed;
      keyed.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<unsigned> sig(masks.size());
        for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = (g.row(v) & masks[c]).size();
        keyed.emplace_back(std::move(sig), v);
      }
      std::sort(keyed.begin(), keyed.end());
      std::size_t start = next.size();
      next.push_back({keyed[0].second});
      for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first != keyed[i - 1].first) next.emplace_back();
        next.back().push_back(keyed[i].second);
      }
      if (next.size() - start > 1) changed = true;
    }
    cells = std::move(next);
  }
}

Code encode(const Graph& g, const std::vector<Vertex>& order) {
  const unsigned n = g.order();
  std::array<Vertex, kMaxOrder> pos{};
  for (unsigned i = 0; i < n; ++i) pos[order[i]] = i;
  Code code(n, 0);
  for (unsigned j = 1; j < n; ++j) {
    VertexSet::Word row = 0;
    for (Vertex u : g.row(order[j])) {
      const unsigned i = pos[u];
      if (i < j) row |= VertexSet::Word{1} << (j - 1 - i);
    }
    code[j] = row;
  }
  return code;
}

// u and v are interchangeable: swapping them is an automorphism.
bool swappable(const Graph& g, Vertex u, Vertex v) {
  const VertexSet pair = VertexSet::singleton(u) | VertexSet::singleton(v);
  return (g.row(u) - pair) == (g.row(v) - pair);
}

struct Search {
  const Graph& g;
  bool have_best = false;
  Code best;
  std::vector<Vertex> best_order;

  void run(Partition cells) {
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      std::vector<Vertex> order;
      order.reserve(g.order());
      for (const auto& c : cells) order.push_back(c.front());
      Code code = encode(g, order);
      if (!have_best || code < best) {
        best = std::move(code);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    const auto idx = static_cast<std::size_t>(target - cells.begin());
    const std::vector<Vertex> cell = *target;
    std::vector<Vertex> tried;
    for (Vertex u : cell) {
      // Individualizing a vertex swappable with an earlier choice yields the
      // image of an explored subtree under an automorphism.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return swappable(g, t, u); })) continue;
      tried.push_back(u);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(idx));
      child.push_back({u});
      std::vector<Vertex> rest;
      for (Vertex w : cell) {
        if (w != u) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(idx) + 1, cells.end());
      run(std::move(child));
    }
  }
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g, unsigned limit) {
  if (g.order() > limit) {
    throw PreconditionError("canonical form requested for order " + std::to_string(g.order()) +
                            " above limit " + std::to_string(limit));
  }
  if (g.order() == 0) return {};
  Partition start(1);
  start[0].resize(g.order());
  std::iota(start[0].begin(), start[0].end(), Vertex{0});
  Search search{g, false, {}, {}};
  search.run(std::move(start));
  return search.best_order;
}

Graph canonical_graph(const Graph& g, unsigned limit) {
  const std::vector<Vertex> order = canonical_labeling(g, limit);
  std::vector<Vertex> perm(g.order());
  for (unsigned i = 0; i < order.size(); ++i) perm[order[i]] = i;
  return relabel(g, perm);
}

std::string canonical_form(const Graph& g, unsigned limit) { return to_graph6(canonical_graph(g, limit)); }

bool isomorphic(const Graph& a, const Graph& b, unsigned limit) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_graph(a, limit) == canonical_graph(b, limit);
}

}  // namespace oldsets
