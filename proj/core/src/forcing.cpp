#include "zf/forcing.hpp"

#include <string>

namespace zf {

ClosureResult closure(const Graph& g, const VertexSet& initial) {
  ClosureResult res;
  res.final_set = initial;
  VertexSet& blue = res.final_set;
  const VertexSet all = g.vertices();
  bool progress = true;
  while (progress && !(blue == all)) {
    progress = false;
    for (int v : blue) {
      VertexSet white = g.neighbors(v) - blue;
      int w = white.first();
      if (w >= 0 && white.next_after(w) < 0) {
        blue.set(w);
        res.trace.steps.push_back({v, w});
        progress = true;
        break;  // restart the scan so the lowest-index forcer always acts
      }
    }
  }
  return res;
}

VertexSet closure_set(const Graph& g, const VertexSet& initial) {
  VertexSet blue = initial;
  const VertexSet all = g.vertices();
  bool progress = true;
  while (progress && !(blue == all)) {
    progress = false;
    for (int v : blue) {
      VertexSet white = g.neighbors(v) - blue;
      int w = white.first();
      if (w >= 0 && white.next_after(w) < 0) {
        blue.set(w);
        progress = true;
      }
    }
  }
  return blue;
}

VertexSet replay_trace(const Graph& g, const VertexSet& initial,
                       const ForcingTrace& trace) {
  VertexSet blue = initial;
  VertexSet forced;
  for (auto [f, w] : trace.steps) {
    if (f < 0 || f >= g.order() || w < 0 || w >= g.order())
      throw InvariantError("trace step out of range");
    if (!blue.test(f))
      throw InvariantError("trace forcer " + std::to_string(f) + " not blue");
    if (forced.test(w))
      throw InvariantError("vertex " + std::to_string(w) + " forced twice");
    VertexSet white = g.neighbors(f) - blue;
    if (!(white == VertexSet{w}))
      throw InvariantError("vertex " + std::to_string(w) +
                           " is not the unique white neighbor of " +
                           std::to_string(f));
    blue.set(w);
    forced.set(w);
  }
  return blue;
}

bool is_forcing_set(const Graph& g, const VertexSet& b) {
  return closure_set(g, b) == g.vertices();
}

namespace {

// Lexicographic s-subset odometer over 0..n-1. Returns false when done.
bool next_combination(std::vector<int>& c, int n) {
  int s = static_cast<int>(c.size());
  int i = s - 1;
  while (i >= 0 && c[i] == n - s + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

ZeroForcingResult zero_forcing_number(const Graph& g, SearchBudget budget) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("zero forcing needs n >= 1");
  std::uint64_t used = 0;
  const VertexSet all = g.vertices();
  for (int s = 1; s <= n; ++s) {
    std::vector<int> comb(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) comb[static_cast<std::size_t>(i)] = i;
    do {
      if (++used > budget.limit) throw BudgetError();
      VertexSet b;
      for (int v : comb) b.set(v);
      if (closure_set(g, b) == all) return {s, b};
    } while (next_combination(comb, n));
  }
  // unreachable: V(G) is always a forcing set
  throw InvariantError("no forcing set found up to size n");
}

}  // namespace zf
