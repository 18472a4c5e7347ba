#pragma once

// Exhaustive corpora of small graphs up to isomorphism, and seeded random
// graphs for property sweeps.

#include <cstdint>
#include <random>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// Canonical 64-bit key: the minimum upper-triangle bitstring over all
/// orderings with nondecreasing degrees. Equal keys iff isomorphic.
/// Supports n <= 11 (the key must fit in 64 bits).
std::uint64_t canonical_key(const Graph& g);

/// All graphs on exactly n vertices, one per isomorphism class, in a
/// deterministic order. n <= 11.
std::vector<Graph> all_graphs(int n);

/// The connected ones, same order.
std::vector<Graph> connected_graphs(int n);

/// G(n, p) with an explicit generator; deterministic for a fixed seed.
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

}  // namespace zf
