#include "pivd/solve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_set>

#include "pivd/bitset_util.hpp"
#include "pivd/canonical.hpp"
#include "pivd/enumerate.hpp"
#include "pivd/error.hpp"

namespace pivd {

namespace {

using Mask = std::vector<uint64_t>;

struct MaskHash {
  size_t operator()(const Mask& m) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : m) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

int ceil_sqrt(long long x) {
  if (x <= 0) return 0;
  auto s = static_cast<long long>(std::sqrt(static_cast<double>(x)));
  while (s * s < x) ++s;
  while ((s - 1) * (s - 1) >= x) --s;
  return static_cast<int>(s);
}

void check_enumerable(size_t set_size, const char* what) {
  if (set_size >= 63)
    throw InvalidArgument(std::string("instance too large: ") + what + " has " +
                          std::to_string(set_size) + " elements to enumerate over");
}

std::vector<int> mask_vertices(const Mask& m) {
  std::vector<int> out;
  for (size_t w = 0; w < m.size(); ++w) {
    uint64_t bits = m[w];
    while (bits) {
      out.push_back(static_cast<int>(w * 64) + __builtin_ctzll(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

Certificate deletion_certificate(const PiVDInstance& inst, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  Certificate cert;
  cert.kind = inst.connected_variant ? Certificate::ConnectedPiDeletion : Certificate::PiDeletion;
  cert.vertices = std::move(vertices);
  return cert;
}

}  // namespace

VCInstance make_vc_instance(Graph graph, int k) {
  if (k < 0) throw InvalidArgument("budget must be non-negative");
  int n = graph.order();
  return {std::move(graph), std::min(k, n)};
}

void validate_certificate(const PiVDInstance& inst, const Certificate& cert) {
  Mask alive = bits::full_mask(inst.graph.order());
  for (int v : cert.vertices) {
    if (v < 0 || v >= inst.graph.order())
      throw InvalidArgument("certificate vertex out of range");
    bits::clear(alive, v);
  }
  if (membership_witness(inst.graph, inst.family, alive))
    throw InvalidArgument("certificate does not destroy all forbidden occurrences");
  if (cert.kind == Certificate::ConnectedPiDeletion && !cert.vertices.empty()) {
    Graph sub = induced_subgraph(inst.graph, cert.vertices);
    if (!is_connected(sub)) throw InvalidArgument("certificate does not induce a connected graph");
  }
}

SolveResult solve_bruteforce(const PiVDInstance& inst) {
  int n = inst.graph.order();
  int k = std::min(inst.k, n);
  SolveResult res;

  std::vector<int> pick;
  Mask alive = bits::full_mask(n);
  // combinations of each size in lexicographic order
  for (int size = 0; size <= k && !res.yes; ++size) {
    pick.assign(size, 0);
    auto rec = [&](auto&& self, int idx, int start) -> bool {
      if (idx == size) {
        ++res.branch_count;
        ++res.membership_calls;
        if (!membership_witness(inst.graph, inst.family, alive)) {
          res.yes = true;
          res.certificate = deletion_certificate(inst, std::vector<int>(pick.begin(), pick.end()));
          return true;
        }
        return false;
      }
      for (int v = start; v < n; ++v) {
        pick[idx] = v;
        bits::clear(alive, v);
        if (self(self, idx + 1, v + 1)) return true;
        bits::set(alive, v);
      }
      return false;
    };
    rec(rec, 0, 0);
  }
  if (res.yes) validate_certificate(inst, *res.certificate);
  return res;
}

SolveResult solve_branching(const PiVDInstance& inst) {
  int n = inst.graph.order();
  int k = std::min(inst.k, n);
  SolveResult res;

  std::unordered_set<Mask, MaskHash> failed;
  Mask deleted = bits::empty_mask(n);
  Mask alive = bits::full_mask(n);
  std::vector<int> path;

  auto rec = [&](auto&& self, int budget) -> bool {
    if (failed.count(deleted)) return false;
    ++res.branch_count;
    ++res.membership_calls;
    auto witness = membership_witness(inst.graph, inst.family, alive);
    if (!witness) {
      res.yes = true;
      res.certificate = deletion_certificate(inst, path);
      return true;
    }
    if (budget > 0) {
      std::vector<int> hits = witness->embedding;
      std::sort(hits.begin(), hits.end());
      for (int v : hits) {
        bits::clear(alive, v);
        bits::set(deleted, v);
        path.push_back(v);
        bool ok = self(self, budget - 1);
        path.pop_back();
        bits::clear(deleted, v);
        bits::set(alive, v);
        if (ok) return true;
      }
    }
    failed.insert(deleted);
    return false;
  };
  rec(rec, k);
  if (res.yes) validate_certificate(inst, *res.certificate);
  return res;
}

SolveResult solve_subexp(const PiVDInstance& inst, ThresholdMode threshold) {
  PropertyClass cls = classify(inst.family);
  if (cls.tag != PropertyClass::ExcludesIndependentSet)
    throw IncompatibleError(
        "solve_subexp applies only to families excluding an independent set (some edgeless member)");
  int d = cls.d_is;
  if (threshold == ThresholdMode::Sqrt2mOverD && d < 2)
    throw IncompatibleError("alternate threshold needs an edgeless member of order >= 2");

  const Graph& g = inst.graph;
  int n = g.order();
  int k = std::min(inst.k, n);
  long long m = g.size();
  SolveResult res;

  if (k >= n) {
    res.yes = true;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    res.certificate = deletion_certificate(inst, std::move(all));
    validate_certificate(inst, *res.certificate);
    return res;
  }

  // Mandatory: at most d-1 isolated vertices may survive.
  std::vector<int> singletons;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) singletons.push_back(v);
  std::vector<int> forced;
  if (static_cast<int>(singletons.size()) > d - 1)
    forced.assign(singletons.begin() + (d - 1), singletons.end());
  int k_cur = k - static_cast<int>(forced.size());
  if (k_cur < 0) return res;  // no

  Mask alive = bits::full_mask(n);
  for (int v : forced) bits::clear(alive, v);
  int n_cur = n - static_cast<int>(forced.size());

  if (m == 0) {
    ++res.branch_count;
    ++res.membership_calls;
    if (!membership_witness(g, inst.family, alive)) {
      res.yes = true;
      res.certificate = deletion_certificate(inst, forced);
      validate_certificate(inst, *res.certificate);
    }
    return res;
  }

  int theta;
  if (threshold == ThresholdMode::Default) {
    theta = ceil_sqrt(4 * m);  // 2*sqrt(m), ceilinged
  } else {
    // sqrt(2m/(d-1)), ceilinged
    theta = 1;
    while (static_cast<long long>(theta) * theta * (d - 1) < 2 * m) ++theta;
  }

  std::vector<int> v_high, v_low;
  for (int v = 0; v < n; ++v) {
    if (!bits::test(alive, v)) continue;
    (g.degree(v) >= theta ? v_high : v_low).push_back(v);
  }

  std::vector<int> low_index(n, -1);
  for (size_t i = 0; i < v_low.size(); ++i) low_index[v_low[i]] = static_cast<int>(i);
  Graph g_low = induced_subgraph(g, v_low);
  auto indep_sets = list_small_independent_sets(g_low, d);

  Mask kept = bits::empty_mask(n);
  auto accept = [&]() {
    std::vector<int> deleted = forced;
    for (int v = 0; v < n; ++v)
      if (bits::test(alive, v) && !bits::test(kept, v)) deleted.push_back(v);
    res.yes = true;
    res.certificate = deletion_certificate(inst, std::move(deleted));
  };

  check_enumerable(v_high.size(), "high-degree side");
  for (uint64_t hmask = 0; hmask < (uint64_t{1} << v_high.size()) && !res.yes; ++hmask) {
    std::vector<int> a_high;
    for (size_t i = 0; i < v_high.size(); ++i)
      if ((hmask >> i) & 1) a_high.push_back(v_high[i]);

    for (const auto& indep_local : indep_sets) {
      if (res.yes) break;
      std::vector<int> indep;
      for (int x : indep_local) indep.push_back(v_low[x]);

      // candidate extension: low-side neighbors of the independent set
      std::vector<int> pool;
      for (int v : indep)
        for (int w : g.neighbors(v))
          if (low_index[w] >= 0) pool.push_back(w);
      std::sort(pool.begin(), pool.end());
      pool.erase(std::unique(pool.begin(), pool.end()), pool.end());

      check_enumerable(pool.size(), "independent-set neighborhood");
      for (uint64_t lmask = 0; lmask < (uint64_t{1} << pool.size()); ++lmask) {
        ++res.branch_count;
        std::vector<int> kept_list = a_high;
        kept_list.insert(kept_list.end(), indep.begin(), indep.end());
        for (size_t i = 0; i < pool.size(); ++i)
          if ((lmask >> i) & 1) kept_list.push_back(pool[i]);
        if (static_cast<int>(kept_list.size()) < n_cur - k_cur) continue;
        std::fill(kept.begin(), kept.end(), 0);
        for (int v : kept_list) bits::set(kept, v);
        ++res.membership_calls;
        if (!membership_witness(g, inst.family, kept)) {
          accept();
          break;
        }
      }
    }
  }

  if (threshold == ThresholdMode::Default) {
    // ceiling-adjusted branch ceiling: 2^ceil(sqrt(m)) * n^(d-1) * 2^((d-1)*ceil(2 sqrt m))
    long long exp2 = ceil_sqrt(m) + static_cast<long long>(d - 1) * ceil_sqrt(4 * m);
    long double bound = std::pow(static_cast<long double>(n_cur), d - 1);
    bound *= std::pow(2.0L, static_cast<long double>(std::min(exp2, 200LL)));
    if (exp2 < 200 && static_cast<long double>(res.branch_count) > bound)
      throw std::logic_error("branch count exceeded its ceiling");
  }

  if (res.yes) validate_certificate(inst, *res.certificate);
  return res;
}

namespace {

// Smallest d consistent with all members of order <= 7: the premise that a
// graph satisfying the property has minimum degree n - d cannot be read off
// a finite family, so it is sampled exhaustively at small orders.
int empirical_mindegree_bound(const ForbiddenFamily& family) {
  static std::mutex mu;
  static std::map<std::string, int> cache;
  std::string key;
  for (const Graph& g : family.members) {
    auto cert = canonical_certificate(g);
    key.append(cert.begin(), cert.end());
    key.push_back('|');
  }
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int bound = 0;
  for (const Graph& g : enumerate_graphs(7)) {
    if (g.order() == 0 || !member_free(g, family)) continue;
    int min_deg = g.order();
    for (int v = 0; v < g.order(); ++v) min_deg = std::min(min_deg, g.degree(v));
    bound = std::max(bound, g.order() - min_deg);
  }
  std::lock_guard<std::mutex> lock(mu);
  cache[key] = bound;
  return bound;
}

}  // namespace

SolveResult solve_mindegree(const PiVDInstance& inst, int d) {
  int evidence = empirical_mindegree_bound(inst.family);
  if (d < evidence)
    throw IncompatibleError("minimum-degree premise fails empirically: a member-free graph of order <= 7 has minimum degree n - " +
                            std::to_string(evidence) + " < n - " + std::to_string(d));

  const Graph& g = inst.graph;
  int n = g.order();
  int k = std::min(inst.k, n);
  long long m = g.size();
  SolveResult res;
  res.warnings.push_back(
      "minimum-degree premise verified empirically on orders <= 7 only; wrong premises yield wrong answers");

  if (k >= n) {
    res.yes = true;
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    res.certificate = deletion_certificate(inst, std::move(all));
    validate_certificate(inst, *res.certificate);
    return res;
  }

  Mask kept = bits::empty_mask(n);
  auto try_kept = [&](const std::vector<int>& kept_list) {
    ++res.branch_count;
    if (static_cast<int>(kept_list.size()) < n - k) return false;
    std::fill(kept.begin(), kept.end(), 0);
    for (int v : kept_list) bits::set(kept, v);
    ++res.membership_calls;
    if (membership_witness(g, inst.family, kept)) return false;
    std::vector<int> deleted;
    for (int v = 0; v < n; ++v)
      if (!bits::test(kept, v)) deleted.push_back(v);
    res.yes = true;
    res.certificate = deletion_certificate(inst, std::move(deleted));
    return true;
  };

  // Branch on a kept low-degree vertex: its non-neighbors inside the kept set
  // number at most d by the premise.
  for (int v = 0; v < n && !res.yes; ++v) {
    if (static_cast<long long>(g.degree(v)) * g.degree(v) > 2 * m) continue;
    std::vector<int> nb = g.neighbors(v);
    std::vector<int> far;
    for (int w = 0; w < n; ++w)
      if (w != v && !g.adjacent(v, w)) far.push_back(w);

    std::vector<int> sub;
    auto far_rec = [&](auto&& self, int idx, const std::vector<int>& nb_pick) -> bool {
      std::vector<int> kept_list = nb_pick;
      kept_list.insert(kept_list.end(), sub.begin(), sub.end());
      kept_list.push_back(v);
      if (try_kept(kept_list)) return true;
      if (static_cast<int>(sub.size()) == d) return false;
      for (int i = idx; i < static_cast<int>(far.size()); ++i) {
        sub.push_back(far[i]);
        if (self(self, i + 1, nb_pick)) return true;
        sub.pop_back();
      }
      return false;
    };
    check_enumerable(nb.size(), "low-degree neighborhood");
    for (uint64_t amask = 0; amask < (uint64_t{1} << nb.size()) && !res.yes; ++amask) {
      std::vector<int> nb_pick;
      for (size_t i = 0; i < nb.size(); ++i)
        if ((amask >> i) & 1) nb_pick.push_back(nb[i]);
      sub.clear();
      far_rec(far_rec, 0, nb_pick);
    }
  }

  if (!res.yes) {
    // Every kept vertex has high degree; drop the rest and brute-force the
    // residual graph, whose order is below sqrt(2m).
    std::vector<int> low, high;
    for (int v = 0; v < n; ++v) {
      if (static_cast<long long>(g.degree(v)) * g.degree(v) <= 2 * m)
        low.push_back(v);
      else
        high.push_back(v);
    }
    int k_res = k - static_cast<int>(low.size());
    if (k_res >= 0) {
      check_enumerable(high.size(), "residual graph");
      for (uint64_t rmask = 0; rmask < (uint64_t{1} << high.size()) && !res.yes; ++rmask) {
        std::vector<int> kept_list;
        for (size_t i = 0; i < high.size(); ++i)
          if ((rmask >> i) & 1) kept_list.push_back(high[i]);
        if (static_cast<int>(high.size()) - static_cast<int>(kept_list.size()) > k_res) continue;
        try_kept(kept_list);
      }
    }
  }

  if (res.yes) validate_certificate(inst, *res.certificate);
  return res;
}

SolveResult solve_connected_bruteforce(const PiVDInstance& inst) {
  const Graph& g = inst.graph;
  int n = g.order();
  int k = std::min(inst.k, n);
  SolveResult res;

  Mask alive = bits::full_mask(n);
  ++res.branch_count;
  ++res.membership_calls;
  if (!membership_witness(g, inst.family, alive)) {
    res.yes = true;
    res.certificate = deletion_certificate(inst, {});  // empty set, trivially connected
    return res;
  }
  if (k == 0) return res;

  std::vector<int> members;
  Mask in_set = bits::empty_mask(n);
  Mask excluded = bits::empty_mask(n);

  auto test_current = [&]() {
    ++res.branch_count;
    for (int v : members) bits::clear(alive, v);
    ++res.membership_calls;
    bool ok = !membership_witness(g, inst.family, alive);
    for (int v : members) bits::set(alive, v);
    if (ok) {
      res.yes = true;
      res.certificate = deletion_certificate(inst, members);
    }
    return ok;
  };

  // Connected sets, each generated once: grow from a seed (its minimum
  // vertex); a popped extension candidate stays excluded for the rest of the
  // frame and its subtrees, and is released when the frame exits.
  auto grow = [&](auto&& self, std::vector<int> ext) -> bool {
    if (test_current()) return true;
    bool found = false;
    std::vector<int> released;
    if (static_cast<int>(members.size()) < k) {
      while (!ext.empty()) {
        int u = ext.front();
        ext.erase(ext.begin());
        std::vector<int> next_ext = ext;
        for (int w : g.neighbors(u))
          if (!bits::test(in_set, w) && !bits::test(excluded, w) &&
              std::find(next_ext.begin(), next_ext.end(), w) == next_ext.end())
            next_ext.push_back(w);
        std::sort(next_ext.begin(), next_ext.end());
        members.push_back(u);
        bits::set(in_set, u);
        found = self(self, std::move(next_ext));
        members.pop_back();
        bits::clear(in_set, u);
        if (found) break;
        bits::set(excluded, u);
        released.push_back(u);
      }
    }
    for (int u : released) bits::clear(excluded, u);
    return found;
  };

  for (int seed = 0; seed < n && !res.yes; ++seed) {
    std::fill(excluded.begin(), excluded.end(), 0);
    for (int v = 0; v < seed; ++v) bits::set(excluded, v);
    members = {seed};
    bits::set(in_set, seed);
    std::vector<int> ext;
    for (int w : g.neighbors(seed))
      if (w > seed) ext.push_back(w);
    grow(grow, std::move(ext));
    bits::clear(in_set, seed);
  }

  if (res.yes) validate_certificate(inst, *res.certificate);
  return res;
}

SolveResult solve_vertex_cover(const VCInstance& inst) {
  const Graph& g = inst.graph;
  int n = g.order();
  int k = std::min(inst.k, n);
  SolveResult res;

  Mask alive = bits::full_mask(n);
  std::vector<int> chosen;

  auto masked_degree = [&](int v) {
    int deg = 0;
    const uint64_t* r = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) deg += __builtin_popcountll(r[w] & alive[w]);
    return deg;
  };

  auto rec = [&](auto&& self, int budget) -> bool {
    ++res.branch_count;
    std::vector<int> taken_here;
    auto undo = [&]() {
      for (auto it = taken_here.rbegin(); it != taken_here.rend(); ++it) {
        bits::set(alive, *it);
        chosen.pop_back();
      }
    };
    // leaf rule: a degree-1 vertex is covered through its neighbor
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n && budget > 0; ++v) {
        if (!bits::test(alive, v) || masked_degree(v) != 1) continue;
        int u = -1;
        for (int w : g.neighbors(v))
          if (bits::test(alive, w)) {
            u = w;
            break;
          }
        bits::clear(alive, u);
        chosen.push_back(u);
        taken_here.push_back(u);
        --budget;
        changed = true;
      }
    }
    int max_deg = 0, pivot = -1;
    long long edges_left = 0;
    for (int v = 0; v < n; ++v) {
      if (!bits::test(alive, v)) continue;
      int dv = masked_degree(v);
      edges_left += dv;
      if (dv > max_deg) {
        max_deg = dv;
        pivot = v;
      }
    }
    edges_left /= 2;
    if (edges_left == 0) return true;
    if (budget <= 0) {
      undo();
      return false;
    }
    // greedy matching lower bound
    {
      Mask used = bits::empty_mask(n);
      int matching = 0;
      for (const auto& [u, v] : g.edges())
        if (bits::test(alive, u) && bits::test(alive, v) && !bits::test(used, u) &&
            !bits::test(used, v)) {
          bits::set(used, u);
          bits::set(used, v);
          ++matching;
        }
      if (matching > budget) {
        undo();
        return false;
      }
    }
    // branch: pivot in the cover, or its whole neighborhood
    bits::clear(alive, pivot);
    chosen.push_back(pivot);
    if (self(self, budget - 1)) return true;
    chosen.pop_back();
    bits::set(alive, pivot);

    std::vector<int> nbrs;
    for (int w : g.neighbors(pivot))
      if (bits::test(alive, w)) nbrs.push_back(w);
    if (static_cast<int>(nbrs.size()) <= budget) {
      for (int w : nbrs) {
        bits::clear(alive, w);
        chosen.push_back(w);
      }
      if (self(self, budget - static_cast<int>(nbrs.size()))) return true;
      for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
        bits::set(alive, *it);
        chosen.pop_back();
      }
    }
    undo();
    return false;
  };

  if (rec(rec, k)) {
    res.yes = true;
    Certificate cert;
    cert.kind = Certificate::VertexCover;
    cert.vertices = chosen;
    std::sort(cert.vertices.begin(), cert.vertices.end());
    res.certificate = std::move(cert);
  }
  return res;
}

std::vector<std::vector<int>> list_small_independent_sets(const Graph& g, int d) {
  if (d < 1) throw InvalidArgument("d must be at least 1");
  std::vector<std::vector<int>> out{{}};
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) >= d - 1) return;
    for (int v = start; v < g.order(); ++v) {
      bool indep = true;
      for (int u : cur)
        if (g.adjacent(u, v)) {
          indep = false;
          break;
        }
      if (!indep) continue;
      cur.push_back(v);
      out.push_back(cur);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() < b.size();
  });
  return out;
}

}  // namespace pivd
