#include "pivd/enumerate.hpp"

#include <algorithm>
#include <set>

#include "pivd/canonical.hpp"
#include "pivd/error.hpp"
#include "pivd/planarity.hpp"

namespace pivd {

std::vector<Graph> enumerate_graphs(int n_max, const EnumConstraints& constraints) {
  if (n_max < 0) throw InvalidArgument("n_max must be non-negative");

  std::vector<Graph> out;
  auto keep = [&](const Graph& g) {
    return !constraints.connected || is_connected(g);
  };

  std::vector<Graph> level{Graph::build(0, {})};
  if (keep(level.front())) out.push_back(level.front());

  for (int n = 1; n <= n_max; ++n) {
    std::vector<Graph> next;
    std::set<std::vector<uint8_t>> seen;
    for (const Graph& base : level) {
      // attach vertex n-1 with every possible neighborhood
      for (uint32_t mask = 0; mask < (uint32_t{1} << (n - 1)); ++mask) {
        std::vector<Edge> edges = base.edges();
        int newdeg = 0;
        for (int v = 0; v < n - 1; ++v)
          if ((mask >> v) & 1) {
            edges.emplace_back(v, n - 1);
            ++newdeg;
          }
        Graph g = Graph::build(n, std::move(edges));
        if (constraints.max_degree && (newdeg > *constraints.max_degree ||
                                       g.max_degree() > *constraints.max_degree))
          continue;
        if (constraints.planar && !is_planar(g)) continue;
        auto cert = canonical_certificate(g);
        if (seen.insert(std::move(cert)).second) next.push_back(std::move(g));
      }
    }
    std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a.edges() < b.edges();
    });
    for (const Graph& g : next)
      if (keep(g)) out.push_back(g);
    level = std::move(next);
  }
  return out;
}

}  // namespace pivd
