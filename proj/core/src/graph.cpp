#include "zf/graph.hpp"

#include <stdexcept>
#include <string>

namespace zf {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges,
             std::string label) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
  if (n > VertexSet::kCapacity)
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds build capacity " +
                                std::to_string(VertexSet::kCapacity));
  n_ = n;
  adj_.resize(static_cast<std::size_t>(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  label_ = std::move(label);
  finish();
}

Graph Graph::from_adjacency(std::vector<VertexSet> adj, std::string label) {
  Graph g;
  g.n_ = static_cast<int>(adj.size());
  if (g.n_ > VertexSet::kCapacity)
    throw std::invalid_argument("graph order exceeds build capacity");
  g.adj_ = std::move(adj);
  VertexSet uni = VertexSet::universe(g.n_);
  for (int v = 0; v < g.n_; ++v) {
    if (g.adj_[v].test(v))
      throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    if (!g.adj_[v].is_subset_of(uni))
      throw std::invalid_argument("adjacency row exceeds vertex range");
    for (int u : g.adj_[v])
      if (!g.adj_[u].test(v))
        throw std::invalid_argument("asymmetric adjacency at edge " +
                                    std::to_string(v) + "-" +
                                    std::to_string(u));
  }
  g.label_ = std::move(label);
  g.finish();
  return g;
}

void Graph::finish() {
  degree_.resize(static_cast<std::size_t>(n_));
  int total = 0;
  max_degree_ = 0;
  min_degree_ = n_ == 0 ? 0 : VertexSet::kCapacity;
  for (int v = 0; v < n_; ++v) {
    degree_[v] = adj_[v].count();
    total += degree_[v];
    if (degree_[v] > max_degree_) max_degree_ = degree_[v];
    if (degree_[v] < min_degree_) min_degree_ = degree_[v];
  }
  if (n_ == 0) min_degree_ = 0;
  edge_count_ = total / 2;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  VertexSet seen{0};
  VertexSet frontier{0};
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbors(v);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen == g.vertices();
}

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet& nb = g.neighbors(v);
    if (nb.count() < 3) continue;
    for (int a : nb) {
      // pairs {a,b} of nonadjacent neighbors, then any third one
      VertexSet bs = (nb - g.neighbors(a));
      bs.reset(a);
      for (int b : bs) {
        if (b <= a) continue;
        VertexSet cs = bs - g.neighbors(b);
        cs.reset(b);
        int c = cs.next_after(b);
        if (c >= 0) return ClawWitness{v, {a, b, c}};
      }
    }
  }
  return std::nullopt;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

}  // namespace zf
