#ifndef PIVD_PLANARITY_HPP
#define PIVD_PLANARITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pivd/graph.hpp"

namespace pivd {

// Combinatorial embedding: a cyclic edge order per vertex plus the face list
// obtained by directed-arc tracing. Faces of an isolated vertex carry the
// vertex itself and no arcs. Face tracing partitions all directed arcs and
// the Euler check n - m + f = 2 holds per connected component.
struct RotationEmbedding {
  struct Face {
    std::vector<std::pair<int, int>> arcs;  // directed boundary cycle
    int isolated_vertex = -1;
    int component = -1;
  };
  std::vector<std::vector<int>> rotation;
  std::vector<Face> faces;

  std::vector<int> boundary_vertices(int face) const;
};

// Embedding via per-block path addition, merged over the block-cut structure;
// quadratic time, which is irrelevant at gadget scale. nullopt means the
// graph is not planar (a verdict, not an error).
std::optional<RotationEmbedding> planar_embedding(const Graph& g);

bool is_planar(const Graph& g);

}  // namespace pivd

#endif
