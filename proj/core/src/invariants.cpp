#include "zf/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "zf/cover.hpp"

namespace zf {

InvariantRow compute_invariants(const Graph& g, std::string id,
                                SearchBudget budget) {
  InvariantRow row;
  row.id = std::move(id);
  row.n = g.order();
  row.max_degree = g.max_degree();
  row.min_degree = g.min_degree();
  row.alpha = max_independent_set(g, budget).count();
  row.beta = row.n - row.alpha;
  row.z = zero_forcing_number(g, budget).number;
  row.connected = is_connected(g);
  row.claw_free = is_claw_free(g);
  row.cubic_or_less = row.max_degree <= 3;
  row.is_k4 = row.n == 4 && g.edge_count() == 6;
  row.is_tree = is_tree(g);
  if (row.alpha + row.beta != row.n || row.z > row.n)
    throw InvariantError("inconsistent invariant row for " + row.id);
  return row;
}

int row_value(const InvariantRow& row, std::string_view invariant) {
  if (invariant == "z") return row.z;
  if (invariant == "alpha") return row.alpha;
  if (invariant == "beta") return row.beta;
  if (invariant == "n") return row.n;
  if (invariant == "max_degree") return row.max_degree;
  if (invariant == "min_degree") return row.min_degree;
  throw std::invalid_argument("unknown invariant '" + std::string(invariant) +
                              "'");
}

bool is_invariant_name(std::string_view name) {
  return name == "z" || name == "alpha" || name == "beta" || name == "n" ||
         name == "max_degree" || name == "min_degree";
}

std::string invariant_csv_header() {
  return "id,n,max_degree,min_degree,alpha,beta,z,connected,claw_free,"
         "cubic_or_less,is_k4,is_tree";
}

std::string to_csv_row(const InvariantRow& r) {
  std::ostringstream out;
  out << r.id << ',' << r.n << ',' << r.max_degree << ',' << r.min_degree
      << ',' << r.alpha << ',' << r.beta << ',' << r.z << ',' << r.connected
      << ',' << r.claw_free << ',' << r.cubic_or_less << ',' << r.is_k4 << ','
      << r.is_tree;
  return out.str();
}

Rational caro_pepper_bound(const Graph& g) {
  if (!is_connected(g))
    throw HypothesisError("Caro-Pepper bound needs a connected graph");
  int delta = g.max_degree();
  if (delta < 1)
    throw HypothesisError("Caro-Pepper bound needs maximum degree >= 1");
  if (delta == 1) return Rational(1);  // connected with Delta = 1 is K_2
  long long n = g.order();
  long long d = delta;
  long long small = g.min_degree();
  return Rational((d - 2) * n - (d - small) + 2, d - 1);
}

}  // namespace zf
