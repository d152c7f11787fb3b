#include "pivd/graph.hpp"

#include <algorithm>
#include <queue>

#include "pivd/error.hpp"

namespace pivd {

Graph Graph::build(int n, std::vector<Edge> edges, std::map<int, std::string> labels) {
  if (n < 0) throw InvalidArgument("vertex count must be non-negative");
  for (auto& [u, v] : edges) {
    if (u == v)
      throw InvalidArgument("self-loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidArgument("endpoint out of range in edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") for order " + std::to_string(n));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.words_ = (n + 63) / 64;
  g.edges_ = std::move(edges);
  g.adj_.assign(static_cast<size_t>(n) * g.words_, 0);
  g.degree_.assign(n, 0);
  for (const auto& [u, v] : g.edges_) {
    g.adj_[static_cast<size_t>(u) * g.words_ + (v >> 6)] |= uint64_t{1} << (v & 63);
    g.adj_[static_cast<size_t>(v) * g.words_ + (u >> 6)] |= uint64_t{1} << (u & 63);
    ++g.degree_[u];
    ++g.degree_[v];
  }
  for (const auto& [v, tag] : labels) {
    if (v < 0 || v >= n) throw InvalidArgument("label on out-of-range vertex " + std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (int x : degree_) d = std::max(d, x);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  out.reserve(degree_[v]);
  const uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) {
    uint64_t bits = r[w];
    while (bits) {
      int b = __builtin_ctzll(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

Graph Graph::with_labels(std::map<int, std::string> labels) const {
  return build(n_, edges_, std::move(labels));
}

Graph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (int v : vertices) {
    if (v < 0 || v >= g.order())
      throw InvalidArgument("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(g.order()));
  }
  std::vector<int> local(g.order(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);

  std::map<int, std::string> labels;
  for (const auto& [v, tag] : g.labels())
    if (local[v] >= 0) labels[local[v]] = tag;

  return Graph::build(static_cast<int>(vertices.size()), std::move(edges), std::move(labels));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::build(g.order(), std::move(edges), g.labels());
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through edge {u,v} = 1 + shortest u-v path avoiding that
  // edge. Exact and comfortably fast at the orders handled here.
  std::optional<int> best;
  std::vector<int> dist(g.order());
  for (const auto& [eu, ev] : g.edges()) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[eu] = 0;
    std::queue<int> q;
    q.push(eu);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (best && dist[v] + 1 >= *best) continue;
      for (int w : g.neighbors(v)) {
        if (v == eu && w == ev) continue;
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      }
    }
    if (dist[ev] >= 0) {
      int cyc = dist[ev] + 1;
      if (!best || cyc < *best) best = cyc;
    }
  }
  return best;
}

DegeneracyResult degeneracy(const Graph& g) {
  DegeneracyResult res;
  std::vector<int> deg(g.order());
  std::vector<char> removed(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) deg[v] = g.degree(v);
  for (int step = 0; step < g.order(); ++step) {
    int pick = -1;
    for (int v = 0; v < g.order(); ++v)
      if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
    res.degeneracy = std::max(res.degeneracy, deg[pick]);
    res.ordering.push_back(pick);
    removed[pick] = 1;
    for (int w : g.neighbors(pick))
      if (!removed[w]) --deg[w];
  }
  return res;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  int off = g.order();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + off, v + off);
  std::map<int, std::string> labels = g.labels();
  for (const auto& [v, tag] : h.labels()) labels[v + off] = tag;
  return Graph::build(g.order() + h.order(), std::move(edges), std::move(labels));
}

Graph identify(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw InvalidArgument("identify: vertex out of range");
  if (u == v) throw InvalidArgument("identify: vertices must differ");
  if (g.adjacent(u, v))
    throw InvalidArgument("identify: vertices " + std::to_string(u) + "," + std::to_string(v) +
                          " are adjacent (would create a self-loop)");
  auto remap = [&](int x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(remap(a), remap(b));
  std::map<int, std::string> labels;
  for (const auto& [x, tag] : g.labels()) {
    if (x == v) continue;  // merged vertex keeps u's label
    labels[remap(x)] = tag;
  }
  return Graph::build(g.order() - 1, std::move(edges), std::move(labels));
}

Graph subdivide(const Graph& g, Edge e, int t) {
  if (e.first > e.second) std::swap(e.first, e.second);
  bool present = e.first >= 0 && e.second < g.order() && e.first != e.second &&
                 g.adjacent(e.first, e.second);
  if (!present)
    throw InvalidArgument("subdivide: edge (" + std::to_string(e.first) + "," +
                          std::to_string(e.second) + ") not in graph");
  if (t < 1) throw InvalidArgument("subdivide: need at least one internal vertex");
  std::vector<Edge> edges;
  for (const auto& ed : g.edges())
    if (ed != e) edges.push_back(ed);
  int prev = e.first;
  for (int i = 0; i < t; ++i) {
    edges.emplace_back(prev, g.order() + i);
    prev = g.order() + i;
  }
  edges.emplace_back(prev, e.second);
  return Graph::build(g.order() + t, std::move(edges), g.labels());
}

}  // namespace pivd
