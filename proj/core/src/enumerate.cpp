#include "zf/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace zf {

namespace {

constexpr int kMaxEnumerable = 11;  // 55 triangle bits fit a 64-bit key

struct Canonizer {
  const Graph& g;
  int n;
  std::vector<int> order_of_degree;  // required degree at each position
  std::vector<int> perm;             // perm[pos] = original vertex
  std::vector<bool> used;
  std::uint64_t best;
  int total_bits;

  explicit Canonizer(const Graph& graph)
      : g(graph), n(graph.order()), best(~std::uint64_t{0}) {
    total_bits = n * (n - 1) / 2;
    std::vector<int> degrees;
    for (int v = 0; v < n; ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());
    order_of_degree = degrees;
    perm.assign(static_cast<std::size_t>(n), -1);
    used.assign(static_cast<std::size_t>(n), false);
  }

  void search(int pos, std::uint64_t key, int bits) {
    if (pos == n) {
      if (key < best) best = key;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (g.degree(v) != order_of_degree[static_cast<std::size_t>(pos)])
        continue;
      std::uint64_t row = 0;
      for (int i = 0; i < pos; ++i)
        row = (row << 1) |
              (g.adjacent(perm[static_cast<std::size_t>(i)], v) ? 1u : 0u);
      std::uint64_t next = (key << pos) | row;
      int next_bits = bits + pos;
      // prune: compare against the same-length prefix of the best key
      if (best != ~std::uint64_t{0} && next > (best >> (total_bits - next_bits)))
        continue;
      used[static_cast<std::size_t>(v)] = true;
      perm[static_cast<std::size_t>(pos)] = v;
      search(pos + 1, next, next_bits);
      used[static_cast<std::size_t>(v)] = false;
    }
  }
};

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
  if (g.order() > kMaxEnumerable)
    throw std::invalid_argument("canonical_key supports n <= 11");
  if (g.order() <= 1) return 0;
  Canonizer c(g);
  c.search(0, 0, 0);
  return c.best;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 1 || n > kMaxEnumerable)
    throw std::invalid_argument("all_graphs supports 1 <= n <= 11");
  // grow one vertex at a time: every class on k+1 vertices arises from some
  // class on k vertices plus a neighborhood mask for the new vertex
  std::vector<Graph> level;
  level.push_back(Graph(1, {}));
  for (int k = 1; k < n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& parent : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<VertexSet> adj(static_cast<std::size_t>(k) + 1);
        for (int v = 0; v < k; ++v) adj[static_cast<std::size_t>(v)] =
            parent.neighbors(v);
        for (int v = 0; v < k; ++v) {
          if ((mask >> v) & 1) {
            adj[static_cast<std::size_t>(v)].set(k);
            adj[static_cast<std::size_t>(k)].set(v);
          }
        }
        Graph g = Graph::from_adjacency(std::move(adj));
        if (seen.insert(canonical_key(g)).second) next.push_back(std::move(g));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  if (n < 1 || n > VertexSet::kCapacity)
    throw std::invalid_argument("random_graph order out of range");
  // fixed-point threshold keeps draws reproducible across platforms
  const std::uint64_t cutoff = static_cast<std::uint64_t>(
      edge_probability * 4294967296.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng() >> 32) < cutoff) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace zf
