#include "zf/graph6.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

namespace zf {

namespace {

constexpr int kBias = 63;

int checked_byte(std::string_view text, std::size_t i) {
  unsigned char c = static_cast<unsigned char>(text[i]);
  if (c < 63 || c > 126)
    throw ParseError("graph6 byte out of range 63..126", i);
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 string", 0);

  std::size_t pos = 0;
  long n;
  if (text[0] != '~') {
    n = checked_byte(text, 0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("eight-byte graph6 order form not supported", 1);
    if (text.size() < 4)
      throw ParseError("truncated long-form graph6 order", text.size());
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | checked_byte(text, i);
    pos = 4;
  }
  if (n == 0) throw ParseError("graph6 order must be at least 1", 0);
  if (n > VertexSet::kCapacity)
    throw ParseError("graph6 order " + std::to_string(n) +
                         " exceeds build capacity " +
                         std::to_string(VertexSet::kCapacity),
                     0);

  long pair_bits = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (text.size() - pos < need)
    throw ParseError("truncated graph6 body: expected " +
                         std::to_string(need) + " data bytes",
                     text.size());
  if (text.size() - pos > need)
    throw ParseError("trailing garbage after graph6 body", pos + need);

  std::vector<int> groups(need);
  for (std::size_t i = 0; i < need; ++i)
    groups[i] = checked_byte(text, pos + i);

  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  long bit = 0;
  auto next_bit = [&]() {
    int b = (groups[static_cast<std::size_t>(bit / 6)] >> (5 - bit % 6)) & 1;
    ++bit;
    return b;
  };
  // column-major upper triangle
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      if (next_bit()) {
        adj[static_cast<std::size_t>(row)].set(col);
        adj[static_cast<std::size_t>(col)].set(row);
      }
    }
  }
  while (bit < static_cast<long>(need) * 6) {
    std::size_t at = pos + static_cast<std::size_t>(bit / 6);
    if (next_bit()) throw ParseError("nonzero padding bits", at);
  }
  return Graph::from_adjacency(std::move(adj), std::string(text));
}

std::string serialize_graph6(const Graph& g) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("cannot serialize the empty graph");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int max_id = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    // tokenize
    std::vector<std::string_view> tok;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tok.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok.size() != 2)
      throw ParseError("expected two vertex ids per line", line_no);
    long v[2];
    for (int t = 0; t < 2; ++t) {
      auto sv = tok[static_cast<std::size_t>(t)];
      auto res = std::from_chars(sv.data(), sv.data() + sv.size(), v[t]);
      if (res.ec != std::errc{} || res.ptr != sv.data() + sv.size())
        throw ParseError("malformed vertex id '" + std::string(sv) + "'",
                         line_no);
      if (v[t] < 0) throw ParseError("negative vertex id", line_no);
      if (v[t] >= VertexSet::kCapacity)
        throw ParseError("vertex id exceeds build capacity", line_no);
    }
    if (v[0] == v[1]) throw ParseError("self-loop", line_no);
    edges.emplace_back(static_cast<int>(v[0]), static_cast<int>(v[1]));
    max_id = std::max(max_id, static_cast<int>(std::max(v[0], v[1])));
    if (end == text.size()) break;
  }
  if (edges.empty()) throw ParseError("empty edge list", line_no);
  return Graph(max_id + 1, edges);
}

}  // namespace zf
