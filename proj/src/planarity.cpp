#include "pivd/planarity.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace pivd {

namespace {

using Arc = std::pair<int, int>;

struct Fragment {
  std::vector<int> attachments;      // embedded vertices touching the fragment
  std::vector<int> inner;            // fragment vertices outside the embedded part
  Edge chord{-1, -1};                // set for single-chord fragments
  std::vector<int> admissible;       // face indices that contain all attachments
};

// Path-addition embedding of one biconnected block with >= 3 vertices.
// Faces are maintained as simple vertex cycles; returns them, or nullopt if
// some fragment has no admissible face.
class BlockEmbedder {
 public:
  explicit BlockEmbedder(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
      verts_.push_back(u);
      verts_.push_back(v);
    }
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    for (int v : verts_) adj_[v] = {};
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& [v, nb] : adj_) std::sort(nb.begin(), nb.end());
  }

  std::optional<std::vector<std::vector<int>>> run() {
    int n = static_cast<int>(verts_.size());
    int m = static_cast<int>(edges_.size());
    if (m > 3 * n - 6) return std::nullopt;

    std::vector<int> cycle = find_cycle();
    for (int v : cycle) in_h_[v] = true;
    for (size_t i = 0; i < cycle.size(); ++i)
      mark_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    faces_.push_back(cycle);
    faces_.emplace_back(cycle.rbegin(), cycle.rend());

    while (true) {
      std::vector<Fragment> frags = fragments();
      if (frags.empty()) break;
      int pick = 0;
      for (size_t i = 0; i < frags.size(); ++i) {
        if (frags[i].admissible.empty()) return std::nullopt;
        if (frags[i].admissible.size() == 1) {
          pick = static_cast<int>(i);
          break;
        }
      }
      embed_path(frags[pick], frags[pick].admissible.front());
    }
    return faces_;
  }

 private:
  void mark_edge(int u, int v) { used_edges_.insert(u < v ? Edge{u, v} : Edge{v, u}); }
  bool edge_used(int u, int v) const {
    return used_edges_.count(u < v ? Edge{u, v} : Edge{v, u}) > 0;
  }

  std::vector<int> find_cycle() const {
    // The block is biconnected, so its first edge lies on a cycle: BFS
    // between the endpoints avoiding the edge itself.
    auto [u, v] = edges_.front();
    std::map<int, int> parent;
    parent[u] = -2;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int w : adj_.at(x)) {
        if (x == u && w == v) continue;
        if (!parent.count(w)) {
          parent[w] = x;
          q.push(w);
        }
      }
    }
    if (!parent.count(v)) throw std::logic_error("biconnected block without a cycle");
    std::vector<int> cycle;
    for (int x = v; x != -2; x = parent.at(x)) cycle.push_back(x);
    return cycle;  // v .. u; the avoided edge closes the cycle
  }

  std::vector<Fragment> fragments() {
    std::vector<Fragment> out;
    // chords between embedded vertices
    for (const auto& [u, v] : edges_) {
      if (in_h_[u] && in_h_[v] && !edge_used(u, v)) {
        Fragment f;
        f.attachments = {u, v};
        f.chord = {u, v};
        out.push_back(std::move(f));
      }
    }
    // components of the block minus the embedded vertices
    std::set<int> seen;
    for (int s : verts_) {
      if (in_h_[s] || seen.count(s)) continue;
      Fragment f;
      std::set<int> attach;
      std::vector<int> stack{s};
      seen.insert(s);
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        f.inner.push_back(v);
        for (int w : adj_.at(v)) {
          if (in_h_[w])
            attach.insert(w);
          else if (!seen.count(w)) {
            seen.insert(w);
            stack.push_back(w);
          }
        }
      }
      std::sort(f.inner.begin(), f.inner.end());
      f.attachments.assign(attach.begin(), attach.end());
      out.push_back(std::move(f));
    }
    for (auto& f : out) {
      for (size_t i = 0; i < faces_.size(); ++i) {
        bool ok = true;
        for (int a : f.attachments)
          if (std::find(faces_[i].begin(), faces_[i].end(), a) == faces_[i].end()) {
            ok = false;
            break;
          }
        if (ok) f.admissible.push_back(static_cast<int>(i));
      }
    }
    return out;
  }

  // Alpha-to-beta path through the fragment interior (empty for chords).
  std::vector<int> fragment_path(const Fragment& f, int a, int b) const {
    if (f.chord.first >= 0) return {};
    std::set<int> inner(f.inner.begin(), f.inner.end());
    std::map<int, int> parent;
    std::queue<int> q;
    for (int w : adj_.at(a))
      if (inner.count(w) && !parent.count(w)) {
        parent[w] = -1;
        q.push(w);
      }
    int hit = -1;
    while (!q.empty() && hit < 0) {
      int v = q.front();
      q.pop();
      if (std::find(adj_.at(v).begin(), adj_.at(v).end(), b) != adj_.at(v).end()) {
        hit = v;
        break;
      }
      for (int w : adj_.at(v))
        if (inner.count(w) && !parent.count(w)) {
          parent[w] = v;
          q.push(w);
        }
    }
    if (hit < 0) throw std::logic_error("fragment path not found");
    std::vector<int> path;
    for (int x = hit; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
  }

  void embed_path(const Fragment& f, int face_idx) {
    int a = f.attachments[0];
    int b = f.attachments[1];
    std::vector<int> inner = fragment_path(f, a, b);

    std::vector<int>& face = faces_[face_idx];
    int L = static_cast<int>(face.size());
    int ia = -1, ib = -1;
    for (int i = 0; i < L; ++i) {
      if (face[i] == a) ia = i;
      if (face[i] == b) ib = i;
    }
    std::vector<int> face1, face2;
    for (int i = ia;; i = (i + 1) % L) {
      face1.push_back(face[i]);
      if (i == ib) break;
    }
    for (auto it = inner.rbegin(); it != inner.rend(); ++it) face1.push_back(*it);
    for (int i = ib;; i = (i + 1) % L) {
      face2.push_back(face[i]);
      if (i == ia) break;
    }
    for (int v : inner) face2.push_back(v);

    faces_[face_idx] = std::move(face1);
    faces_.push_back(std::move(face2));

    int prev = a;
    for (int v : inner) {
      in_h_[v] = true;
      mark_edge(prev, v);
      prev = v;
    }
    mark_edge(prev, b);
  }

  std::vector<Edge> edges_;
  std::vector<int> verts_;
  std::map<int, std::vector<int>> adj_;
  std::map<int, bool> in_h_;
  std::set<Edge> used_edges_;
  std::vector<std::vector<int>> faces_;
};

// Rotation orders per vertex recovered from the face cycles: consecutive arcs
// (u,v),(v,w) fix w as the successor of u around v.
std::map<int, std::vector<int>> rotations_from_faces(const std::vector<std::vector<int>>& faces) {
  std::map<int, std::map<int, int>> succ;
  for (const auto& face : faces) {
    int L = static_cast<int>(face.size());
    for (int i = 0; i < L; ++i) {
      int u = face[i], v = face[(i + 1) % L], w = face[(i + 2) % L];
      succ[v][u] = w;
    }
  }
  std::map<int, std::vector<int>> rot;
  for (auto& [v, nxt] : succ) {
    std::vector<int> cyc;
    int start = nxt.begin()->first;
    int cur = start;
    do {
      cyc.push_back(cur);
      cur = nxt.at(cur);
    } while (cur != start && static_cast<int>(cyc.size()) <= static_cast<int>(nxt.size()));
    if (cyc.size() != nxt.size()) throw std::logic_error("rotation is not a single cycle");
    rot[v] = std::move(cyc);
  }
  return rot;
}

// Biconnected components as edge lists, via lowpoints.
std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g, const std::vector<int>& comp) {
  std::vector<std::vector<Edge>> blocks;
  std::map<int, int> disc, low;
  std::vector<Edge> stack;
  int timer = 0;

  struct Frame {
    int v, parent;
    size_t next_idx;
    std::vector<int> nbrs;
  };
  for (int root : comp) {
    if (disc.count(root)) continue;
    std::vector<Frame> call;
    call.push_back({root, -1, 0, g.neighbors(root)});
    disc[root] = low[root] = timer++;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.next_idx < f.nbrs.size()) {
        int w = f.nbrs[f.next_idx++];
        if (w == f.parent) continue;
        if (!disc.count(w)) {
          stack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          call.push_back({w, f.v, 0, g.neighbors(w)});
        } else if (disc[w] < disc[f.v]) {
          stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        int v = f.v, parent = f.parent;
        call.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= disc[parent]) {
            std::vector<Edge> block;
            while (!stack.empty()) {
              Edge e = stack.back();
              bool last = e == Edge{parent, v};
              stack.pop_back();
              block.push_back(e);
              if (last) break;
            }
            blocks.push_back(std::move(block));
          }
        }
      }
    }
  }
  return blocks;
}

}  // namespace

std::vector<int> RotationEmbedding::boundary_vertices(int face) const {
  const Face& f = faces[face];
  if (f.isolated_vertex >= 0) return {f.isolated_vertex};
  std::vector<int> out;
  for (const auto& [u, v] : f.arcs) out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<RotationEmbedding> planar_embedding(const Graph& g) {
  RotationEmbedding emb;
  emb.rotation.assign(g.order(), {});

  auto comps = connected_components(g);
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    const auto& comp = comps[ci];
    if (comp.size() == 1) {
      RotationEmbedding::Face face;
      face.isolated_vertex = comp.front();
      face.component = static_cast<int>(ci);
      emb.faces.push_back(std::move(face));
      continue;
    }

    std::map<int, std::vector<std::vector<int>>> per_vertex;  // block rotations per vertex
    for (auto& block : biconnected_blocks(g, comp)) {
      if (block.size() == 1) {
        auto [u, v] = block.front();
        per_vertex[u].push_back({v});
        per_vertex[v].push_back({u});
        continue;
      }
      auto faces = BlockEmbedder(block).run();
      if (!faces) return std::nullopt;
      for (auto& [v, cyc] : rotations_from_faces(*faces)) per_vertex[v].push_back(cyc);
    }
    // Merging block rotations by concatenation keeps each block contiguous
    // around its cut vertices, which preserves planarity.
    for (auto& [v, rots] : per_vertex) {
      std::vector<int> merged;
      for (auto& r : rots) merged.insert(merged.end(), r.begin(), r.end());
      emb.rotation[v] = std::move(merged);
    }

    // Trace faces of the merged component embedding.
    std::map<int, std::map<int, int>> pos;
    for (int v : comp)
      for (size_t i = 0; i < emb.rotation[v].size(); ++i) pos[v][emb.rotation[v][i]] = static_cast<int>(i);
    std::set<Arc> remaining;
    int arc_count = 0;
    for (int v : comp)
      for (int w : emb.rotation[v]) {
        remaining.insert({v, w});
        ++arc_count;
      }
    int face_count = 0;
    while (!remaining.empty()) {
      Arc start = *remaining.begin();
      RotationEmbedding::Face face;
      face.component = static_cast<int>(ci);
      Arc cur = start;
      do {
        remaining.erase(cur);
        face.arcs.push_back(cur);
        auto [u, v] = cur;
        const auto& rot = emb.rotation[v];
        int nxt = rot[(pos[v][u] + 1) % rot.size()];
        cur = {v, nxt};
      } while (cur != start);
      emb.faces.push_back(std::move(face));
      ++face_count;
    }
    int n_c = static_cast<int>(comp.size());
    int m_c = arc_count / 2;
    if (n_c - m_c + face_count != 2)
      throw std::logic_error("embedding failed the Euler check");
  }
  return emb;
}

bool is_planar(const Graph& g) { return planar_embedding(g).has_value(); }

}  // namespace pivd
