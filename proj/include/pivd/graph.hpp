#ifndef PIVD_GRAPH_HPP
#define PIVD_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pivd {

using Edge = std::pair<int, int>;

// Simple undirected graph on dense vertex ids 0..n-1. Immutable after
// construction; adjacency is kept as packed bit rows so adjacency tests and
// neighborhood intersections are word operations.
class Graph {
 public:
  Graph() = default;

  // Normalizes edges (sorted, deduplicated). Rejects self-loops and
  // out-of-range endpoints, naming the offending pair.
  static Graph build(int n, std::vector<Edge> edges,
                     std::map<int, std::string> labels = {});

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool adjacent(int u, int v) const {
    return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  int degree(int v) const { return degree_[v]; }
  int max_degree() const;
  std::vector<int> neighbors(int v) const;

  // Raw bit row for vertex v, words_per_row() words long.
  const uint64_t* row(int v) const { return adj_.data() + static_cast<size_t>(v) * words_; }
  int words_per_row() const { return words_; }

  const std::map<int, std::string>& labels() const { return labels_; }
  Graph with_labels(std::map<int, std::string> labels) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<Edge> edges_;
  std::vector<uint64_t> adj_;
  std::vector<int> degree_;
  std::map<int, std::string> labels_;
};

// Induced subgraph on the given vertices (deduplicated internally, kept in
// ascending order: result vertex i is the i-th smallest of `vertices`).
// Rejects ids outside V(g). Labels are carried over.
Graph induced_subgraph(const Graph& g, std::vector<int> vertices);

Graph complement(const Graph& g);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);  // exactly one component

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct DegeneracyResult {
  int degeneracy = 0;
  std::vector<int> ordering;  // elimination order: each vertex has at most
                              // `degeneracy` neighbors later in the sequence
};
DegeneracyResult degeneracy(const Graph& g);

// Edit primitives. identify merges v into u (rejecting u == v and adjacent
// pairs); vertices above v shift down by one. subdivide replaces edge e by a
// path with t >= 1 internal vertices appended at the end.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph identify(const Graph& g, int u, int v);
Graph subdivide(const Graph& g, Edge e, int t);

}  // namespace pivd

#endif
