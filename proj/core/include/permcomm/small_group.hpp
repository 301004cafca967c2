#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permcomm/perm.hpp"

namespace permcomm {

inline constexpr uint64_t kDefaultGroupOrderCap = 10'000;

// A fully tabulated finite permutation group: element list (index 0 is the
// identity, breadth-first discovery order), dense multiplication and inverse
// tables, element orders and conjugacy-class ids.
struct SmallGroup {
  int degree = 0;
  int order = 0;
  std::vector<Perm> elements;
  std::vector<uint16_t> mul; // order*order, row-major: mul[a*order+b] = a*b
  std::vector<uint16_t> inv;
  std::vector<int32_t> element_order;
  std::vector<int32_t> class_id;
  int class_count = 0;
  std::vector<uint16_t> generators; // element indices of the input gens

  uint16_t mul_at(int a, int b) const {
    return mul[static_cast<size_t>(a) * order + b];
  }
};

SmallGroup build_small_group(std::span<const Perm> gens, int n,
                             uint64_t order_cap = kDefaultGroupOrderCap);

// Ordered generating pairs as a bitset over the flat index a*order + b.
struct PairSet {
  int order = 0;
  std::vector<uint64_t> bits;
  uint64_t count = 0;

  bool test(int a, int b) const {
    const size_t i = static_cast<size_t>(a) * order + b;
    return (bits[i >> 6] >> (i & 63)) & 1;
  }
};

// All ordered pairs (a, b) with <a, b> = G, by per-pair closure over the
// multiplication table with an early stop once the closure exceeds the
// largest proper divisor of |G|.
PairSet generating_pairs(const SmallGroup &G, int workers = 1);

} // namespace permcomm
