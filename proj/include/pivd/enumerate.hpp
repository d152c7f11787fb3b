#ifndef PIVD_ENUMERATE_HPP
#define PIVD_ENUMERATE_HPP

#include <optional>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

struct EnumConstraints {
  std::optional<int> max_degree;
  bool connected = false;
  bool planar = false;
};

// All graphs on 0..n_max vertices up to isomorphism (canonical-certificate
// dedup) satisfying the constraints, grown vertex by vertex. Hereditary
// constraints (degree, planarity) prune during growth; connectivity filters
// at the end. Exhaustive mode is intended for n_max <= 8.
std::vector<Graph> enumerate_graphs(int n_max, const EnumConstraints& constraints = {});

}  // namespace pivd

#endif
