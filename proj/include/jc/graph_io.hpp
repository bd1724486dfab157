#pragma once

#include <string>

#include "jc/graph.hpp"

namespace jc {

enum class GraphFormat { edge_list, graph6 };

// edge_list: "n m" header line, then m lines "u v" with 0 <= u < v < n.
// graph6: the standard bit-packed ASCII encoding, no ">>graph6<<" header.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace jc
