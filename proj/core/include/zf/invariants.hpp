#pragma once

// Per-graph invariant rows: the unit of the conjecture corpus.

#include <string>
#include <string_view>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"
#include "zf/rational.hpp"

namespace zf {

struct InvariantRow {
  std::string id;
  int n = 0;
  int max_degree = 0;
  int min_degree = 0;
  int alpha = 0;
  int beta = 0;
  int z = 0;
  bool connected = false;
  bool claw_free = false;
  bool cubic_or_less = false;  // max degree <= 3
  bool is_k4 = false;
  bool is_tree = false;
};

/// Fills a row from the exact solvers and predicates. Propagates
/// BudgetError; callers streaming a corpus may catch it and exclude the row.
InvariantRow compute_invariants(const Graph& g, std::string id,
                                SearchBudget budget = {});

/// Named numeric row field ("z", "alpha", "beta", "n", "max_degree",
/// "min_degree"). Throws std::invalid_argument for unknown names.
int row_value(const InvariantRow& row, std::string_view invariant);
bool is_invariant_name(std::string_view name);

/// CSV serialization with a fixed column order:
/// id,n,max_degree,min_degree,alpha,beta,z,connected,claw_free,
/// cubic_or_less,is_k4,is_tree
std::string invariant_csv_header();
std::string to_csv_row(const InvariantRow& row);

/// Caro-Pepper upper bound ((Delta-2)n - (Delta-delta) + 2) / (Delta-1)
/// as an exact rational. Requires a connected graph; Delta = 1 (i.e. K_2)
/// returns 1; a single vertex is rejected.
Rational caro_pepper_bound(const Graph& g);

}  // namespace zf
