#pragma once

// Constructive zero forcing set procedures: the claw-free construction
// producing a set of size exactly beta(G), and the degree-bounded
// construction producing a set of size at most (Delta-2)*beta(G) + 1.

#include <string>
#include <utility>
#include <vector>

#include "zf/cover.hpp"
#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

struct SwapStep {
  int removed;
  int added;
  friend bool operator==(const SwapStep&, const SwapStep&) = default;
};

struct ConstructionReport {
  VertexSet initial_set;
  VertexSet final_set;
  std::vector<SwapStep> swaps;
  std::vector<int> greedy_additions;
  ForcingTrace closure_trace;  // trace of the final set's closure
  int size_bound = 0;
};

/// Claw-free construction. Requires g connected, claw-free, n >= 2.
/// Starts from a minimum vertex cover C; if some cover vertex has exactly
/// one neighbor in the independent complement the cover itself is the set,
/// otherwise one cover vertex with two such neighbors is swapped for one of
/// them. The result is a forcing set of size exactly beta(G).
ConstructionReport clawfree_forcing_set(const Graph& g,
                                        SearchBudget budget = {});

/// Initial blue set for the degree-bounded construction: the cover plus,
/// for each cover vertex v, its min(|N(v) cap X|, max(0, d(v)-3))
/// lowest-index neighbors in X. The returned partition classifies cover
/// vertices by their number of white X-neighbors after this coloring and is
/// frozen for the rest of the procedure. |s0| <= (Delta-2)|cover|.
/// Requires Delta >= 3 and a minimum cover with independent complement.
std::pair<VertexSet, CoverPartition> build_s0(const Graph& g,
                                              const VertexSet& cover,
                                              SearchBudget budget = {});

/// Degree-bounded construction. Requires g connected with Delta >= 3.
/// Iteratively repairs s0 with cover-for-independent swaps (class2 first,
/// then class3 vertices with exactly two remaining white X-neighbors), plus
/// at most one greedy addition when a stall leaves no swap eligible (the
/// bipartite case where the whole cover is class3, and class3 vertices
/// whose blue allowance was consumed inside s0). Every accepted
/// modification must strictly enlarge the terminal blue set, else
/// InvariantError. The result is a forcing set of size at most
/// (Delta-2)*beta(G) + 1, and at most (Delta-2)*beta(G) when no greedy
/// addition occurs.
ConstructionReport delta_bound_forcing_set(const Graph& g,
                                           SearchBudget budget = {});

/// Line-oriented text report for the CLI: initial set, each swap, greedy
/// additions, final set, bound, validity.
std::string format_report(const ConstructionReport& report, const Graph& g,
                          const std::string& mode);

}  // namespace zf
