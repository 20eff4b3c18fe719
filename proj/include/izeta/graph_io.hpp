#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "izeta/graph.hpp"

namespace izeta {

// Text edge list: a header line "n m", then m lines "i j" with 0 <= i < j < n.
// Malformed input throws std::invalid_argument naming the offending line.
GraphSample read_graph(std::istream& in);
GraphSample read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const GraphSample& g);

// Accepts "c3", "c5", "k4", "petersen" and "path2".
GraphSample builtin_graph(std::string_view name);

}  // namespace izeta
