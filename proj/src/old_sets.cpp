#include "oldsets/old_sets.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "oldsets/detail/checks.hpp"
#include "oldsets/errors.hpp"
#include "oldsets/forced.hpp"

namespace oldsets {

namespace detail {

void require_locatable(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.row(v).empty()) throw NotLocatableError("vertex " + std::to_string(v) + " is isolated");
  }
  const auto twins = open_twins(g);
  if (!twins.empty()) {
    throw NotLocatableError("vertices " + std::to_string(twins.front().first) + " and " +
                            std::to_string(twins.front().second) + " are open twins");
  }
}

}  // namespace detail

std::string_view to_string(SolveMethod m) {
  return m == SolveMethod::BruteForce ? "bruteforce" : "branch-and-bound";
}

bool is_total_dominating(const Graph& g, VertexSet s) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.row(v) & s).empty()) return false;
  }
  return true;
}

namespace {

// Traces N(v) & s pairwise distinct.
bool traces_distinct(const Graph& g, VertexSet s) {
  std::array<VertexSet::Word, kMaxOrder> traces{};
  const unsigned n = g.order();
  for (Vertex v = 0; v < n; ++v) traces[v] = (g.row(v) & s).bits();
  std::sort(traces.begin(), traces.begin() + n);
  return std::adjacent_find(traces.begin(), traces.begin() + n) == traces.begin() + n;
}

// Smallest k with 2^k - 1 >= n: the traces are distinct nonempty subsets of S.
unsigned counting_bound(unsigned n) { return static_cast<unsigned>(std::bit_width(n)); }

class BranchAndBound {
public:
  explicit BranchAndBound(const Graph& g) : g_(g), n_(g.order()) {
    std::vector<unsigned> resolves(n_, 0);
    for (Vertex x = 0; x < n_; ++x) {
      for (Vertex y = x + 1; y < n_; ++y) {
        for (Vertex v : g.row(x) ^ g.row(y)) ++resolves[v];
      }
    }
    order_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return resolves[a] > resolves[b]; });
  }

  // Least OLD set S with chosen <= S, S & excluded empty, |S| < bound.
  std::optional<VertexSet> solve(VertexSet chosen, VertexSet excluded, unsigned bound) {
    return search(chosen, excluded, bound);
  }

  std::uint64_t nodes() const { return nodes_; }

private:
  // Adds vertices that every completion must contain: the sole remaining
  // dominator of some vertex, or the sole remaining separator of a pair.
  // Returns false if some vertex or pair can no longer be handled.
  bool propagate(VertexSet& chosen, VertexSet excluded) const {
    const VertexSet avail = g_.vertices() - excluded;
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex v = 0; v < n_; ++v) {
        const VertexSet d = g_.row(v) & avail;
        if (d.empty()) return false;
        if (d.size() == 1 && !chosen.contains(d.front())) {
          chosen |= d;
          grew = true;
        }
      }
      for (Vertex x = 0; x < n_; ++x) {
        for (Vertex y = x + 1; y < n_; ++y) {
          const VertexSet d = (g_.row(x) ^ g_.row(y)) & avail;
          if (d.empty()) return false;
          if (d.size() == 1 && !chosen.contains(d.front())) {
            chosen |= d;
            grew = true;
          }
        }
      }
    }
    return true;
  }

  std::optional<VertexSet> search(VertexSet chosen, VertexSet excluded, unsigned bound) {
    ++nodes_;
    if (!propagate(chosen, excluded)) return std::nullopt;
    if (chosen.size() >= bound) return std::nullopt;
    if (is_old_set(g_, chosen)) return chosen;
    if (std::max(chosen.size() + 1, counting_bound(n_)) >= bound) return std::nullopt;

    const VertexSet decided = chosen | excluded;
    auto next = std::find_if(order_.begin(), order_.end(), [&](Vertex v) { return !decided.contains(v); });
    // Unreachable: with nothing left to decide, propagate() either failed or chosen is OLD.
    if (next == order_.end()) return std::nullopt;
    const Vertex v = *next;

    std::optional<VertexSet> best = search(chosen | VertexSet::singleton(v), excluded, bound);
    if (best) bound = best->size();
    if (auto alt = search(chosen, excluded | VertexSet::singleton(v), bound)) best = alt;
    return best;
  }

  const Graph& g_;
  unsigned n_;
  std::vector<Vertex> order_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_old_set(const Graph& g, VertexSet s) {
  return is_total_dominating(g, s) && traces_distinct(g, s);
}

bool locates(const Graph& g, VertexSet s, Vertex v) {
  const VertexSet trace = g.neighbours(v) & s;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w != v && (g.row(w) & s) == trace) return false;
  }
  return true;
}

SolveResult old_number_bruteforce(const Graph& g) {
  detail::require_locatable(g);
  const unsigned n = g.order();
  if (n > kBruteForceLimit) {
    throw PreconditionError("exhaustive solver limited to order " + std::to_string(kBruteForceLimit));
  }
  SolveResult r;
  r.method = SolveMethod::BruteForce;
  const VertexSet::Word end = VertexSet::Word{1} << n;
  for (unsigned k = 1; k <= n; ++k) {
    // Gosper's hack walks the k-subsets in increasing numeric order.
    for (VertexSet::Word m = (VertexSet::Word{1} << k) - 1; m < end;) {
      ++r.nodes_explored;
      if (is_old_set(g, VertexSet(m))) {
        r.gamma = k;
        r.witness = VertexSet(m);
        return r;
      }
      const VertexSet::Word low = m & (~m + 1);
      const VertexSet::Word ripple = m + low;
      m = (((ripple ^ m) >> 2) / low) | ripple;
    }
  }
  // A locatable graph always has V itself as an OLD set.
  throw NotLocatableError("no OLD set found");
}

SolveResult old_number(const Graph& g) {
  detail::require_locatable(g);
  const unsigned n = g.order();
  BranchAndBound bnb(g);
  const VertexSet forced = classify_forced(g).forced();

  const auto best = bnb.solve(forced, {}, n + 1);
  if (!best) throw NotLocatableError("no OLD set found");
  const unsigned gamma = best->size();

  // Fix the undecided vertices from the top bit down, excluding each one when
  // a size-gamma solution survives; this yields the least optimal bitmask.
  VertexSet chosen = forced;
  VertexSet excluded;
  if (*best != forced) {
    for (Vertex v = n; v-- > 0;) {
      if (chosen.contains(v)) continue;
      if (bnb.solve(chosen, excluded | VertexSet::singleton(v), gamma + 1)) {
        excluded.insert(v);
      } else {
        chosen.insert(v);
      }
    }
  }

  SolveResult r;
  r.method = SolveMethod::BranchAndBound;
  r.gamma = gamma;
  r.witness = chosen;
  r.nodes_explored = bnb.nodes();
  return r;
}

SolveResult old_number_disconnected(const Graph& g) {
  detail::require_locatable(g);
  SolveResult total;
  total.method = SolveMethod::BranchAndBound;
  for (const auto& comp : connected_components(g)) {
    const SolveResult part = old_number(comp.graph);
    total.gamma += part.gamma;
    total.nodes_explored += part.nodes_explored;
    for (Vertex v : part.witness) total.witness.insert(comp.to_parent[v]);
  }
  return total;
}

}  // namespace oldsets
