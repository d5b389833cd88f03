#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace bk {

// Deterministic, well-spread index tuples over a product of finite ranges.
// Returns min(prod(sizes), cap) tuples (all of them when cap is 0 or the
// product is small); a strided walk rather than a lexicographic prefix, so a
// truncated sample still covers every region of the space.
inline std::vector<std::vector<size_t>> strided_product(const std::vector<size_t>& sizes,
                                                        size_t cap) {
  std::vector<std::vector<size_t>> out;
  unsigned long long total = 1;
  for (size_t s : sizes) {
    if (s == 0) return out;
    total *= s;
    if (total > (1ull << 40)) break; // avoid overflow; treated as "huge"
  }
  auto decode = [&](unsigned long long x) {
    std::vector<size_t> t(sizes.size());
    for (size_t k = 0; k < sizes.size(); ++k) {
      t[k] = static_cast<size_t>(x % sizes[k]);
      x /= sizes[k];
    }
    return t;
  };
  if (cap == 0 || total <= cap) {
    for (unsigned long long i = 0; i < total; ++i) out.push_back(decode(i));
    return out;
  }
  unsigned long long stride = 2654435761ull % total;
  if (stride == 0) stride = 1;
  while (std::gcd(stride, total) != 1) ++stride;
  unsigned long long x = 0;
  for (size_t i = 0; i < cap; ++i) {
    out.push_back(decode(x));
    x = (x + stride) % total;
  }
  return out;
}

} // namespace bk
