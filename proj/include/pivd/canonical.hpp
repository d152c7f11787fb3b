#ifndef PIVD_CANONICAL_HPP
#define PIVD_CANONICAL_HPP

#include <cstdint>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

// Canonical form: the minimum adjacency-matrix encoding over all vertex
// permutations (column-major upper triangle), serialized as one order byte
// followed by packed bits. Equal for isomorphic graphs, distinct otherwise,
// deterministic across runs. Exact for any order up to 255; sized for small
// gadget graphs (see default_order_cap), larger inputs merely get slow.
std::vector<uint8_t> canonical_certificate(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace pivd

#endif
