#ifndef PERMOD_DETAIL_SUBSETS_HPP
#define PERMOD_DETAIL_SUBSETS_HPP

#include <cstdint>
#include <vector>

namespace permod::detail {

/// Advance a k-subset of {0..n-1} to its lexicographic successor.
inline bool next_subset(std::vector<uint32_t>& s, uint32_t n) {
  const uint32_t k = uint32_t(s.size());
  int i = int(k) - 1;
  while (i >= 0 && s[i] == n - k + i) --i;
  if (i < 0) return false;
  ++s[i];
  for (uint32_t j = uint32_t(i) + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

inline std::vector<std::vector<uint32_t>> all_subsets(uint32_t n, uint32_t k) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> s(k);
  for (uint32_t i = 0; i < k; ++i) s[i] = i;
  do {
    out.push_back(s);
  } while (next_subset(s, n));
  return out;
}

}  // namespace permod::detail

#endif
