#pragma once

#include <cstdint>
#include <random>

#include "permcomm/perm.hpp"

namespace permcomm {

// All randomized code paths draw from mt19937_64 through uniform_below so
// that a seed fixes the byte-identical output on every platform
// (std::uniform_int_distribution is not specified tightly enough for that).
using Rng = std::mt19937_64;

inline uint64_t uniform_below(Rng &rng, uint64_t bound) {
  // Rejection sampling over the largest multiple of bound below 2^64.
  const uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
  uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % bound;
}

inline Perm random_perm(Rng &rng, int n) {
  std::vector<int32_t> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(uniform_below(rng, uint64_t(i) + 1));
    std::swap(img[i], img[j]);
  }
  return from_images0(std::move(img));
}

inline Perm random_even_perm(Rng &rng, int n) {
  for (;;) {
    Perm p = random_perm(rng, n);
    if (parity(p) == Parity::even)
      return p;
  }
}

// Uniformly random l-cycle on {1..n}: choose l of n points in random order
// by a partial Fisher-Yates pass, then close them into one cycle.
inline Perm random_lcycle(Rng &rng, int n, int l) {
  std::vector<int32_t> pts(n);
  for (int i = 0; i < n; ++i)
    pts[i] = i;
  for (int i = 0; i < l; ++i) {
    const int j =
        i + static_cast<int>(uniform_below(rng, uint64_t(n - i)));
    std::swap(pts[i], pts[j]);
  }
  std::vector<int32_t> img(n);
  for (int i = 0; i < n; ++i)
    img[i] = i;
  for (int i = 0; i + 1 < l; ++i)
    img[pts[i]] = pts[i + 1];
  img[pts[l - 1]] = pts[0];
  return from_images0(std::move(img));
}

} // namespace permcomm
