#include "pivd/canonical.hpp"

#include <algorithm>

#include "pivd/error.hpp"

namespace pivd {

namespace {

// Branch-and-bound over vertex placements. The encoding is read column by
// column: placing vertex x at position j > 0 contributes one machine word
// whose bit for position i < j is adj(placed[i], x), earlier positions more
// significant, so word-wise integer comparison is the lexicographic bit
// comparison. One column word holds up to 64 bits, which bounds the order at
// 65; canonical forms are only ever taken of small gadget graphs.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<uint64_t> run() {
    if (n_ <= 1) return {};
    if (n_ > 65) throw InvalidArgument("canonical certificate supports order <= 65");
    cur_.assign(n_ - 1, 0);
    best_.assign(n_ - 1, ~uint64_t{0});
    have_best_ = false;
    used_.assign(n_, 0);
    placed_.clear();
    descend(0);
    return best_;
  }

 private:
  uint64_t column_word(int pos, int cand) const {
    uint64_t w = 0;
    for (int i = 0; i < pos; ++i)
      if (g_.adjacent(placed_[i], cand)) w |= uint64_t{1} << (pos - 1 - i);
    return w;
  }

  // -1 / 0 / +1 for cur_[0..len) versus best_[0..len).
  int prefix_compare(int len) const {
    if (!have_best_) return -1;
    for (int i = 0; i < len; ++i)
      if (cur_[i] != best_[i]) return cur_[i] < best_[i] ? -1 : 1;
    return 0;
  }

  // Swapping two unused twins is an automorphism, so one representative per
  // twin pair suffices at any position.
  bool twins(int u, int v) const {
    for (int x = 0; x < n_; ++x) {
      if (x == u || x == v) continue;
      if (g_.adjacent(u, x) != g_.adjacent(v, x)) return false;
    }
    return true;
  }

  void descend(int pos) {
    if (pos == n_) {
      best_ = cur_;
      have_best_ = true;
      return;
    }
    struct Cand {
      uint64_t word;
      int v;
    };
    std::vector<Cand> cands;
    cands.reserve(n_ - pos);
    for (int v = 0; v < n_; ++v)
      if (!used_[v]) cands.push_back({column_word(pos, v), v});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.word != b.word ? a.word < b.word : a.v < b.v;
    });
    for (size_t i = 0; i < cands.size(); ++i) {
      bool dup = false;
      for (size_t j = 0; j < i && cands[j].word == cands[i].word; ++j)
        if (twins(cands[j].v, cands[i].v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      if (pos > 0) {
        cur_[pos - 1] = cands[i].word;
        // Siblings are sorted by word, so once the prefix exceeds the best
        // encoding every later sibling does too.
        if (prefix_compare(pos) > 0) break;
      }
      used_[cands[i].v] = 1;
      placed_.push_back(cands[i].v);
      descend(pos + 1);
      placed_.pop_back();
      used_[cands[i].v] = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> placed_;
  std::vector<char> used_;
  std::vector<uint64_t> cur_, best_;
  bool have_best_ = false;
};

}  // namespace

std::vector<uint8_t> canonical_certificate(const Graph& g) {
  std::vector<uint64_t> cols = Canonicalizer(g).run();

  std::vector<uint8_t> bytes{static_cast<uint8_t>(g.order())};
  int bitpos = 0;
  auto push_bit = [&](bool b) {
    if (bitpos % 8 == 0) bytes.push_back(0);
    if (b) bytes.back() |= uint8_t(uint8_t{1} << (7 - bitpos % 8));
    ++bitpos;
  };
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i) push_bit((cols[j - 1] >> (j - 1 - i)) & 1);
  return bytes;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> dg, dh;
  for (int v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (int v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_certificate(g) == canonical_certificate(h);
}

}  // namespace pivd
