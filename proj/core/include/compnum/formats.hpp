#pragma once

#include <string>
#include <string_view>

#include "compnum/digraph.hpp"
#include "compnum/error.hpp"
#include "compnum/graph.hpp"

namespace compnum {

// graph6, restricted to the one-byte header form (n <= 62). The body lists
// the upper triangle column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
// six bits per byte, most significant bit first, each byte offset by 63,
// zero-padded. Labels are kept exactly; nothing is canonicalized.

/// Parses one graph6 line (no trailing newline). Throws ParseError carrying
/// the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Throws std::invalid_argument for graphs above kMaxOrder.
std::string write_graph6(const Graph& g);

// Arc list:
//
//   digraph <n>
//   <tail> <head>
//   ...
//
// Blank lines are ignored and '#' starts a comment anywhere on a line.

/// Throws ParseError carrying the 1-based line number.
Digraph parse_arc_list(std::string_view text);

/// Header, then one arc per line in (tail, head) order. `comment`, when
/// non-empty, is emitted as leading '#' lines.
std::string write_arc_list(const Digraph& d, std::string_view comment = {});

/// Graphviz rendering of a witness digraph. Vertices below `original_order`
/// are named by label; the rest are named z1, z2, ... in label order.
std::string write_dot(const Digraph& d, int original_order);

}  // namespace compnum
