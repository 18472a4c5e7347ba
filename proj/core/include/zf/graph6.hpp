#pragma once

// graph6 (McKay) codec, headerless, plus plain edge-list text.
// Short form is used for n <= 62; the three-byte long form covers larger n
// up to the build capacity.

#include <string>
#include <string_view>

#include "zf/graph.hpp"

namespace zf {

/// Parses one headerless graph6 string (no trailing newline).
/// Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding of g (short form whenever n <= 62).
std::string serialize_graph6(const Graph& g);

/// Parses "u v" lines. Duplicate and reversed edges are tolerated; blank
/// lines are skipped. The order is 1 + the largest vertex id.
/// Throws ParseError with the offending 1-based line number.
Graph parse_edge_list(std::string_view text);

}  // namespace zf
