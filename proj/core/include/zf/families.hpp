#pragma once

// Generators for the sharpness families and graph operations studied
// alongside the zero forcing / vertex cover bounds. All generators use a
// deterministic vertex layout: original vertices first, additions in
// application order.

#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete_bipartite(int a, int b);

/// Star K_{1,k}: center 0, leaves 1..k.
Graph star(int k);

/// Complete graph K_n (n >= 3) with one pendant attached to each of the
/// first p clique vertices, 0 <= p <= n-1. Claw-free with Z = beta = n-1.
/// Pendant i (vertex n+i) hangs from clique vertex i.
Graph construction1(int clique_size, int pendant_count);

/// Cycle C_k (k >= 3, vertices 0..k-1) plus k cliques; every vertex of the
/// i-th clique (size sizes[i] >= 1) is adjacent to cycle vertices i and
/// (i+1) mod k. Claw-free with alpha = k and Z = beta = sum(sizes).
Graph construction2(int k, const std::vector<int>& sizes);

/// Join: disjoint union plus every cross edge. Vertices of g keep their
/// ids; vertices of h are shifted by n(g).
Graph join(const Graph& g, const Graph& h);

/// k-leaf support vertex addition: attach a new vertex w to v, then k
/// leaves to w. Requires d(v) <= k, the degree range under which the
/// bound-preservation lemma applies. w gets id n, the leaves n+1..n+k.
Graph k_lsva(const Graph& g, int v, int k);

/// Tree family reaching Z = (Delta-2)*beta + 1: start from K_{1,k}
/// (k >= 3) and apply a (k-1)-LSVA at each listed vertex in order.
/// Each target must have degree <= k-1 at application time.
Graph t_star(int k, const std::vector<int>& ops);

/// Non-tree family with Delta = 3 reaching Z = beta + 1: start from
/// K_{2,3} and apply a 2-LSVA at each listed vertex in order.
Graph g_star(const std::vector<int>& ops);

/// (Z, beta) values the construction guarantees, when known.
struct ExpectedInvariants {
  std::optional<int> z;
  std::optional<int> beta;
};

ExpectedInvariants construction1_expected(int clique_size, int pendant_count);
ExpectedInvariants construction2_expected(int k, const std::vector<int>& sizes);
ExpectedInvariants star_expected(int k);
ExpectedInvariants t_star_expected(int k, int op_count);
ExpectedInvariants g_star_expected(int op_count);

}  // namespace zf
