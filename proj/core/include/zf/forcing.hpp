#pragma once

// Zero forcing color-change process: closures, forcing traces, set
// validation and an exact minimum zero forcing number solver.

#include <cstdint>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

struct ForcingStep {
  int forcer;
  int forced;
  friend bool operator==(const ForcingStep&, const ForcingStep&) = default;
};

/// Ordered record of (forcer, forced) moves witnessing a closure.
struct ForcingTrace {
  std::vector<ForcingStep> steps;
};

struct ClosureResult {
  VertexSet final_set;
  ForcingTrace trace;
};

/// Runs the color-change rule to its fixed point. Deterministic: among all
/// currently eligible forcers the lowest-index one acts, then eligibility is
/// recomputed. The final set is order-independent; the trace is not.
ClosureResult closure(const Graph& g, const VertexSet& initial);

/// Fixed point only, no trace. Same final set as closure().
VertexSet closure_set(const Graph& g, const VertexSet& initial);

/// Independent replay validator: checks that at each step the forcer is
/// blue and the forced vertex is its unique white neighbor, and that no
/// vertex is forced twice. Returns the final blue set.
VertexSet replay_trace(const Graph& g, const VertexSet& initial,
                       const ForcingTrace& trace);

bool is_forcing_set(const Graph& g, const VertexSet& b);

/// Cap on closure invocations (zero forcing solver) or search-tree nodes
/// (independent set solver). Exceeding it throws BudgetError.
struct SearchBudget {
  std::uint64_t limit = 100'000'000;
};

struct ZeroForcingResult {
  int number = 0;
  VertexSet witness;
};

/// Exact Z(G) by enumerating candidate sets in increasing cardinality,
/// lexicographic within each size; the first forcing set found is the
/// witness, so it is the lexicographically least minimum one.
ZeroForcingResult zero_forcing_number(const Graph& g, SearchBudget budget = {});

}  // namespace zf
