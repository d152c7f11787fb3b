#ifndef PIVD_IO_HPP
#define PIVD_IO_HPP

#include <string>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

// Text format: header line `p <n> <m>`, then m lines `e <u> <v>` with
// 0-based endpoints. Blank lines and `#` comments are ignored. Files may hold
// several graphs separated by `---` lines.
std::vector<Graph> parse_graphs(const std::string& text);
Graph parse_graph(const std::string& text);  // rejects files with != 1 graph

std::string format_graph(const Graph& g);
std::string format_graphs(const std::vector<Graph>& graphs);

// DOT output; vertex labels come from the graph's label map when present.
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace pivd

#endif
