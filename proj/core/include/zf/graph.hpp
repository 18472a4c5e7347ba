#pragma once

// Immutable simple undirected graph with adjacency-set access.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zf/errors.hpp"
#include "zf/vertex_set.hpp"

namespace zf {

class Graph {
public:
  /// Builds a graph on vertices 0..n-1. Edges are deduplicated; reversed
  /// duplicates are fine. Self-loops and out-of-range endpoints throw.
  Graph(int n, const std::vector<std::pair<int, int>>& edges,
        std::string label = "");

  /// Builds from adjacency rows; validates symmetry and irreflexivity.
  static Graph from_adjacency(std::vector<VertexSet> adj,
                              std::string label = "");

  int order() const { return n_; }
  int edge_count() const { return edge_count_; }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return degree_[v]; }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }
  VertexSet vertices() const { return VertexSet::universe(n_); }

  const std::string& label() const { return label_; }
  Graph with_label(std::string label) const {
    Graph g = *this;
    g.label_ = std::move(label);
    return g;
  }

private:
  Graph() = default;
  void finish();  // degree cache + invariant checks

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<int> degree_;
  int max_degree_ = 0;
  int min_degree_ = 0;
  int edge_count_ = 0;
  std::string label_;
};

/// True iff every vertex is reachable from vertex 0. n must be >= 1.
bool is_connected(const Graph& g);

/// Finds an induced K_{1,3}: a vertex with three pairwise nonadjacent
/// neighbors. Leaves are reported in increasing order.
std::optional<ClawWitness> find_claw(const Graph& g);

inline bool is_claw_free(const Graph& g) { return !find_claw(g).has_value(); }

bool is_tree(const Graph& g);

}  // namespace zf
