#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "permcomm/perm.hpp"

namespace permcomm {

struct OrbitPartition {
  int degree = 0;
  std::vector<int32_t> orbit_of; // 0-based point -> orbit id (discovery order)
  int orbit_count = 0;

  bool transitive() const noexcept { return orbit_count == 1; }
};

// Orbits of <gens> on {1..n} by breadth-first search over generator images.
OrbitPartition orbits(std::span<const Perm> gens, int n);

// The transitivity test for the pair ((1 2 ... p), tau): true iff tau fixes
// no point of [p+1, n] and every nontrivial cycle of tau moves some point
// of [1, p]. Equivalent to transitivity of the generated group.
bool transitivity_criterion(int p, int n, const Perm &tau);

struct BlockSystem {
  int degree = 0;
  std::vector<int32_t> block_of; // 0-based point -> block id
  int block_size = 0;
  int block_count = 0;
};

// Minimal block system of the transitive group <gens> whose block contains
// both seed points (1-based). Iterated merging of point classes under
// generator images until stable.
BlockSystem block_system(std::span<const Perm> gens, int n, int x, int y);

struct PrimitivityResult {
  bool primitive = false;
  std::optional<BlockSystem> witness; // nontrivial system when imprimitive
};

// Primitivity by minimal-block search from {1, y} for every y != 1.
// Throws NotTransitive on intransitive input (blocks are only defined for
// transitive groups here).
PrimitivityResult is_primitive(std::span<const Perm> gens, int n);

// Primitivity via the large-prime-cycle criterion: a transitive group of
// degree n containing a p-cycle for a prime p > n/2 is primitive. Requires
// a power of some generator to be a p-cycle as the containment witness.
bool primitivity_shortcut(std::span<const Perm> gens, int n, int p);

enum class GroupKind { Alternating, Symmetric, Other };

struct GroupClass {
  GroupKind kind = GroupKind::Other;
  std::string justification;      // "jordan" or "closure"
  std::optional<uint64_t> order;  // known exactly only on the closure path
};

// Jordan's criterion: a transitive group of degree n that contains a
// p-cycle for a prime p with n/2 < p <= n-3 is the alternating group when
// every generator is even and the symmetric group otherwise. The witness
// must be a power of some generator. Throws PreconditionViolated when any
// hypothesis fails; callers then fall back to classify_by_closure.
GroupClass jordan_classify(std::span<const Perm> gens, int n,
                           const Perm &p_cycle_witness);

inline constexpr uint64_t kDefaultClosureCap = 4'000'000;

// Exact order of <gens> by breadth-first closure under multiplication.
// Deterministic; throws OrderCapExceeded once more than cap elements are
// found.
uint64_t closure_order(std::span<const Perm> gens, int n,
                       uint64_t cap = kDefaultClosureCap);

// Classification backed by the closure oracle instead of Jordan's theorem.
GroupClass classify_by_closure(std::span<const Perm> gens, int n,
                               uint64_t cap = kDefaultClosureCap);

uint64_t factorial_u64(int n); // n <= 20

} // namespace permcomm
