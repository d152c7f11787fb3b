#ifndef PIVD_BITSET_UTIL_HPP
#define PIVD_BITSET_UTIL_HPP

#include <cstdint>
#include <vector>

namespace pivd::bits {

inline std::vector<uint64_t> empty_mask(int n) {
  return std::vector<uint64_t>((n + 63) / 64, 0);
}

inline std::vector<uint64_t> full_mask(int n) {
  std::vector<uint64_t> m((n + 63) / 64, ~uint64_t{0});
  if (n % 64 && !m.empty()) m.back() = (uint64_t{1} << (n % 64)) - 1;
  return m;
}

inline bool test(const std::vector<uint64_t>& m, int v) {
  return (m[v >> 6] >> (v & 63)) & 1u;
}

inline void set(std::vector<uint64_t>& m, int v) { m[v >> 6] |= uint64_t{1} << (v & 63); }
inline void clear(std::vector<uint64_t>& m, int v) { m[v >> 6] &= ~(uint64_t{1} << (v & 63)); }

inline int count(const std::vector<uint64_t>& m) {
  int c = 0;
  for (uint64_t w : m) c += __builtin_popcountll(w);
  return c;
}

}  // namespace pivd::bits

#endif
