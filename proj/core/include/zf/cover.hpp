#pragma once

// Exact maximum independent set / minimum vertex cover, and the
// X-neighbor classification of cover vertices used by the constructive
// procedures.

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf {

/// Exact alpha(G) witness: independent, maximum, and lexicographically
/// least among maximum independent sets.
VertexSet max_independent_set(const Graph& g, SearchBudget budget = {});

/// alpha restricted to the induced subgraph G[allowed]. Value only.
int independence_number_within(const Graph& g, const VertexSet& allowed,
                               SearchBudget budget = {});

struct VertexCoverResult {
  int beta = 0;
  VertexSet cover;
};

/// beta(G) = n - alpha(G); cover = V minus the max_independent_set witness.
VertexCoverResult vertex_cover_number(const Graph& g, SearchBudget budget = {});

/// Cover vertices classified by how many neighbors they have in the
/// independent complement X: class1 exactly one, class2 exactly two,
/// class3 three or more. Vertices with none are left unclassified.
struct CoverPartition {
  VertexSet cover;
  VertexSet independent;
  VertexSet class1;
  VertexSet class2;
  VertexSet class3;
};

/// Throws ContractError unless cover is a vertex cover whose complement is
/// independent.
CoverPartition classify_by_x(const Graph& g, const VertexSet& cover);

}  // namespace zf
