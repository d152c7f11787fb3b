#include "pivd/subgraph.hpp"

#include <algorithm>

namespace pivd {

namespace {

// Pattern vertices are matched in a static order that keeps each vertex
// adjacent to an already-matched one where possible: most matched neighbors
// first, then higher degree, then smaller id.
std::vector<int> match_order(const Graph& pattern) {
  int p = pattern.order();
  std::vector<int> order;
  std::vector<char> chosen(p, 0);
  for (int step = 0; step < p; ++step) {
    int best = -1, best_links = -1;
    for (int v = 0; v < p; ++v) {
      if (chosen[v]) continue;
      int links = 0;
      for (int u : order)
        if (pattern.adjacent(u, v)) ++links;
      if (best < 0 || links > best_links ||
          (links == best_links && pattern.degree(v) > pattern.degree(best)))
        { best = v; best_links = links; }
    }
    chosen[best] = 1;
    order.push_back(best);
  }
  return order;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, const std::vector<uint64_t>* alive)
      : host_(host), pattern_(pattern), words_(host.words_per_row()) {
    avail_.assign(words_, ~uint64_t{0});
    int tail = host.order() & 63;
    if (words_ > 0 && tail) avail_.back() = (uint64_t{1} << tail) - 1;
    if (host.order() == 0) avail_.clear();
    if (alive)
      for (int w = 0; w < words_; ++w) avail_[w] &= (*alive)[w];
  }

  std::optional<std::vector<int>> find() {
    order_ = match_order(pattern_);
    map_.assign(pattern_.order(), -1);
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(int depth) {
    if (depth == pattern_.order()) return true;
    int pv = order_[depth];

    std::vector<uint64_t> cand = avail_;
    for (int j = 0; j < depth; ++j) {
      int pu = order_[j];
      const uint64_t* r = host_.row(map_[pu]);
      if (pattern_.adjacent(pu, pv))
        for (int w = 0; w < words_; ++w) cand[w] &= r[w];
      else
        for (int w = 0; w < words_; ++w) cand[w] &= ~r[w];
    }
    int need = pattern_.degree(pv);
    for (int w = 0; w < words_; ++w) {
      uint64_t bits = cand[w];
      while (bits) {
        int hv = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (host_.degree(hv) < need) continue;
        map_[pv] = hv;
        avail_[w] &= ~(uint64_t{1} << (hv & 63));
        if (extend(depth + 1)) return true;
        avail_[w] |= uint64_t{1} << (hv & 63);
        map_[pv] = -1;
      }
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  int words_;
  std::vector<uint64_t> avail_;
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return std::nullopt;
  return Matcher(host, pattern, nullptr).find();
}

std::optional<std::vector<int>> contains_induced(const Graph& host, const Graph& pattern,
                                                 const std::vector<uint64_t>& alive) {
  return Matcher(host, pattern, &alive).find();
}

}  // namespace pivd
