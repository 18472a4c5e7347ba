#include "zf/families.hpp"

#include <stdexcept>
#include <string>

namespace zf {

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges, "K" + std::to_string(n));
}

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges, "P" + std::to_string(n));
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(n - 1, 0);
  return Graph(n, edges, "C" + std::to_string(n));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("complete bipartite needs both sides >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges,
               "K" + std::to_string(a) + "," + std::to_string(b));
}

Graph star(int k) {
  if (k < 1) throw std::invalid_argument("star needs k >= 1 leaves");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= k; ++v) edges.emplace_back(0, v);
  return Graph(k + 1, edges, "K1," + std::to_string(k));
}

Graph construction1(int clique_size, int pendant_count) {
  if (clique_size < 3)
    throw std::invalid_argument("construction1 needs clique size >= 3");
  if (pendant_count < 0 || pendant_count > clique_size - 1)
    throw std::invalid_argument(
        "construction1 allows at most clique_size - 1 pendants");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < clique_size; ++u)
    for (int v = u + 1; v < clique_size; ++v) edges.emplace_back(u, v);
  for (int i = 0; i < pendant_count; ++i)
    edges.emplace_back(i, clique_size + i);
  return Graph(clique_size + pendant_count, edges, "construction1");
}

Graph construction2(int k, const std::vector<int>& sizes) {
  if (k < 3) throw std::invalid_argument("construction2 needs cycle length >= 3");
  if (static_cast<int>(sizes.size()) != k)
    throw std::invalid_argument("construction2 needs one clique size per cycle vertex");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("construction2 clique sizes must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < k; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(k - 1, 0);
  int next = k;
  for (int i = 0; i < k; ++i) {
    int lo = next;
    next += sizes[static_cast<std::size_t>(i)];
    for (int u = lo; u < next; ++u) {
      for (int v = u + 1; v < next; ++v) edges.emplace_back(u, v);
      edges.emplace_back(u, i);
      edges.emplace_back(u, (i + 1) % k);
    }
  }
  return Graph(next, edges, "construction2");
}

Graph join(const Graph& g, const Graph& h) {
  if (g.order() < 1 || h.order() < 1)
    throw std::invalid_argument("join needs two nonempty graphs");
  int ng = g.order();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < ng; ++u)
    for (int v : g.neighbors(u))
      if (v > u) edges.emplace_back(u, v);
  for (int u = 0; u < h.order(); ++u)
    for (int v : h.neighbors(u))
      if (v > u) edges.emplace_back(ng + u, ng + v);
  for (int u = 0; u < ng; ++u)
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, ng + v);
  return Graph(ng + h.order(), edges, "join");
}

Graph k_lsva(const Graph& g, int v, int k) {
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("k-LSVA target out of range");
  if (k < 1) throw std::invalid_argument("k-LSVA needs k >= 1");
  if (g.degree(v) > k)
    throw std::invalid_argument(
        "k-LSVA target degree " + std::to_string(g.degree(v)) +
        " exceeds " + std::to_string(k));
  int n = g.order();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int w : g.neighbors(u))
      if (w > u) edges.emplace_back(u, w);
  edges.emplace_back(v, n);
  for (int i = 1; i <= k; ++i) edges.emplace_back(n, n + i);
  return Graph(n + 1 + k, edges, g.label());
}

Graph t_star(int k, const std::vector<int>& ops) {
  if (k < 3) throw std::invalid_argument("t_star needs k >= 3");
  Graph g = star(k);
  for (int v : ops) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("t_star op target out of range");
    if (g.degree(v) > k - 1)
      throw std::invalid_argument(
          "t_star op target must have degree <= k-1");
    g = k_lsva(g, v, k - 1);
  }
  return g.with_label("t_star");
}

Graph g_star(const std::vector<int>& ops) {
  Graph g = complete_bipartite(2, 3);
  for (int v : ops) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("g_star op target out of range");
    g = k_lsva(g, v, 2);
  }
  return g.with_label("g_star");
}

ExpectedInvariants construction1_expected(int clique_size, int) {
  return {clique_size - 1, clique_size - 1};
}

ExpectedInvariants construction2_expected(int, const std::vector<int>& sizes) {
  int total = 0;
  for (int s : sizes) total += s;
  return {total, total};
}

ExpectedInvariants star_expected(int k) {
  if (k < 3) return {std::nullopt, 1};
  return {k - 1, 1};
}

ExpectedInvariants t_star_expected(int k, int op_count) {
  int beta = 1 + op_count;
  return {(k - 2) * beta + 1, beta};
}

ExpectedInvariants g_star_expected(int op_count) {
  int beta = 2 + op_count;
  return {beta + 1, beta};
}

}  // namespace zf
