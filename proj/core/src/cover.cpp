#include "zf/cover.hpp"

#include <string>

namespace zf {

namespace {

struct MisSearch {
  const Graph& g;
  std::uint64_t used = 0;
  std::uint64_t limit;
  int best = 0;

  MisSearch(const Graph& g, SearchBudget budget)
      : g(g), limit(budget.limit) {}

  // Upper bound on alpha(G[p]): size of a greedy clique cover.
  int clique_cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      int v = p.first();
      VertexSet cand = p & g.neighbors(v);
      p.reset(v);
      while (!cand.empty()) {
        int u = cand.first();
        p.reset(u);
        cand.reset(u);
        cand &= g.neighbors(u);
      }
      ++cliques;
    }
    return cliques;
  }

  // Branch on a maximum-degree vertex of the candidate set: in or out.
  void rec(VertexSet p, int current) {
    if (++used > limit) throw BudgetError();
    if (current + p.count() <= best) return;
    if (p.empty()) {
      if (current > best) best = current;
      return;
    }
    if (current + clique_cover_bound(p) <= best) return;
    int pick = -1, pick_deg = -1;
    for (int v : p) {
      int d = (g.neighbors(v) & p).count();
      if (d > pick_deg) {
        pick_deg = d;
        pick = v;
      }
    }
    rec(p - g.neighbors(pick).with(pick), current + 1);
    rec(p.without(pick), current);
  }

  int alpha(const VertexSet& p) {
    best = 0;
    rec(p, 0);
    return best;
  }
};

VertexSet mask_above(int v) {
  VertexSet m = VertexSet::universe(VertexSet::kCapacity);
  return m - VertexSet::universe(v + 1);
}

}  // namespace

int independence_number_within(const Graph& g, const VertexSet& allowed,
                               SearchBudget budget) {
  MisSearch search(g, budget);
  return search.alpha(allowed);
}

VertexSet max_independent_set(const Graph& g, SearchBudget budget) {
  MisSearch search(g, budget);
  const int alpha = search.alpha(g.vertices());
  // Lexicographically least witness: take v exactly when a maximum
  // independent set extending the current choices through v exists.
  VertexSet chosen;
  VertexSet allowed = g.vertices();
  int have = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!allowed.test(v)) continue;
    VertexSet rest = (allowed - g.neighbors(v)) & mask_above(v);
    if (have + 1 + search.alpha(rest) == alpha) {
      chosen.set(v);
      ++have;
      allowed = rest;
    }
  }
  if (have != alpha)
    throw InvariantError("lexicographic completion missed alpha");
  return chosen;
}

VertexCoverResult vertex_cover_number(const Graph& g, SearchBudget budget) {
  VertexSet mis = max_independent_set(g, budget);
  return {g.order() - mis.count(), g.vertices() - mis};
}

CoverPartition classify_by_x(const Graph& g, const VertexSet& cover) {
  if (!cover.is_subset_of(g.vertices()))
    throw ContractError("cover contains non-vertices");
  VertexSet x = g.vertices() - cover;
  for (int v : x)
    if (g.neighbors(v).intersects(x))
      throw ContractError(
          "complement of the given cover is not independent (edge inside it "
          "at vertex " +
          std::to_string(v) + ")");
  CoverPartition part;
  part.cover = cover;
  part.independent = x;
  for (int v : cover) {
    int k = (g.neighbors(v) & x).count();
    if (k == 1) part.class1.set(v);
    else if (k == 2) part.class2.set(v);
    else if (k >= 3) part.class3.set(v);
  }
  return part;
}

}  // namespace zf
