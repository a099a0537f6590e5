#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "distidx/graph.hpp"

namespace distidx {

// graph6 for orders 1..62: one byte n+63, then the upper triangle in
// column-major order (0-1, 0-2, 1-2, 0-3, ...) packed six bits per byte,
// high bit first, each byte offset by 63.
std::string emit_graph6(const Graph& g);

// Throws kBadEncoding on bytes outside [63, 126], wrong length, nonzero
// padding bits, or an order the codec does not support.
Graph parse_graph6(std::string_view line);

// One graph per line; blank lines and ">>graph6<<" headers are skipped.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace distidx
