#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "permcomm/small_group.hpp"

namespace permcomm {

// The seven Nielsen images of (a, b): (b,a), (a^-1,b), (a,b^-1), (ab,b),
// (ba,b), (a,ab), (a,ba). Duplicates collapse (at most 7 distinct).
std::vector<std::pair<uint16_t, uint16_t>>
nielsen_neighbors(const SmallGroup &G, uint16_t a, uint16_t b);

// Every automorphism of G as a permutation of element indices. Natural
// alternating groups of degree != 6 use conjugation by the ambient
// symmetric group; all other groups (including A6, whose outer
// automorphisms are not induced this way) go through a generator-image
// search over order-matched candidates.
std::vector<std::vector<uint16_t>> automorphisms(const SmallGroup &G);

struct CensusOptions {
  bool include_commutator_classes = true;
  bool long_running_ok = false;
  int workers = 1;
};

struct PairCensus {
  uint64_t generating_pairs = 0;
  uint64_t comm_classes_g = 0;       // commutator classes under G-conjugacy
  uint64_t comm_classes_ambient = 0; // ... under ambient S_n-conjugacy
  uint64_t t2_systems = 0;
  uint64_t aut_orbits = 0;
  double wall_seconds = 0.0;
};

// Full census over the ordered generating pairs: T2-systems are the orbits
// under Nielsen moves plus automorphisms, Aut-orbits under automorphisms
// alone, both by disjoint-set merging over the flat pair index.
PairCensus pair_census(const SmallGroup &G, const CensusOptions &options = {});

} // namespace permcomm
