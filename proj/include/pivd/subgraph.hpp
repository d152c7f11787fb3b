#ifndef PIVD_SUBGRAPH_HPP
#define PIVD_SUBGRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

// Injective map phi with {phi(u),phi(v)} in E(host) iff {u,v} in E(pattern);
// nullopt iff no such map exists. Backtracking with degree and mapped-
// adjacency pruning; deterministic, so returned embeddings are reproducible.
// `alive` optionally restricts the host to a vertex subset (one bit per
// host vertex, words as in Graph::row).
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern);
std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern,
                                                 const std::vector<uint64_t>& alive);

}  // namespace pivd

#endif
