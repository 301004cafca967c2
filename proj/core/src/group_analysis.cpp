#include "permcomm/group_analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <unordered_set>

#include "permcomm/errors.hpp"

namespace permcomm {

namespace {

void check_degrees(std::span<const Perm> gens, int n) {
  if (n < 1)
    throw PreconditionViolated("degree must be at least 1");
  for (const Perm &g : gens)
    if (g.degree() != n)
      throw DegreeMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match n=" + std::to_string(n));
}

} // namespace

uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20)
    throw PreconditionViolated("factorial_u64 requires 0 <= n <= 20");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<uint64_t>(i);
  return f;
}

OrbitPartition orbits(std::span<const Perm> gens, int n) {
  check_degrees(gens, n);
  OrbitPartition part;
  part.degree = n;
  part.orbit_of.assign(n, -1);
  std::vector<int32_t> stack;
  for (int start = 0; start < n; ++start) {
    if (part.orbit_of[start] != -1)
      continue;
    const int32_t id = part.orbit_count++;
    part.orbit_of[start] = id;
    stack.assign(1, start);
    while (!stack.empty()) {
      const int32_t x = stack.back();
      stack.pop_back();
      for (const Perm &g : gens) {
        const int32_t y = g[x];
        if (part.orbit_of[y] == -1) {
          part.orbit_of[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return part;
}

bool transitivity_criterion(int p, int n, const Perm &tau) {
  if (p < 2 || p >= n)
    throw InvalidWindow("transitivity criterion requires 2 <= p < n");
  if (tau.degree() != n)
    throw DegreeMismatch("tau has degree " + std::to_string(tau.degree()) +
                         ", expected " + std::to_string(n));
  for (int x = p; x < n; ++x)
    if (tau[x] == x)
      return false;
  // Every nontrivial cycle must meet [1, p]; walk cycles from their minimum.
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (seen[x] || tau[x] == x)
      continue;
    bool meets_head = false;
    int y = x;
    do {
      seen[y] = 1;
      if (y < p)
        meets_head = true;
      y = tau[y];
    } while (y != x);
    if (!meets_head)
      return false;
  }
  return true;
}

namespace {

// Union-find with size balancing; find compresses paths.
struct DisjointSets {
  std::vector<int32_t> parent;
  std::vector<int32_t> size;

  explicit DisjointSets(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i)
      parent[i] = i;
  }

  int32_t find(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns the root that lost its class, or -1 if already merged.
  int32_t unite(int32_t a, int32_t b) {
    int32_t ra = find(a), rb = find(b);
    if (ra == rb)
      return -1;
    if (size[ra] < size[rb])
      std::swap(ra, rb);
    parent[rb] = ra;
    size[ra] += size[rb];
    return rb;
  }
};

BlockSystem block_system_unchecked(std::span<const Perm> gens, int n, int x,
                                   int y) {
  DisjointSets ds(n);
  std::vector<int32_t> queue;
  const int32_t lost = ds.unite(x - 1, y - 1);
  if (lost >= 0)
    queue.push_back(lost);
  while (!queue.empty()) {
    const int32_t gamma = queue.back();
    queue.pop_back();
    const int32_t kappa = ds.find(gamma);
    for (const Perm &g : gens) {
      const int32_t l = ds.unite(g[gamma], g[kappa]);
      if (l >= 0)
        queue.push_back(l);
    }
  }

  BlockSystem bs;
  bs.degree = n;
  bs.block_of.assign(n, -1);
  std::vector<int32_t> root_to_block(n, -1);
  for (int i = 0; i < n; ++i) {
    const int32_t r = ds.find(i);
    if (root_to_block[r] == -1)
      root_to_block[r] = bs.block_count++;
    bs.block_of[i] = root_to_block[r];
  }
  bs.block_size = n / bs.block_count;
  return bs;
}

} // namespace

BlockSystem block_system(std::span<const Perm> gens, int n, int x, int y) {
  check_degrees(gens, n);
  if (x < 1 || x > n || y < 1 || y > n)
    throw PointOutOfRange("seed point outside [1, n]");
  if (x == y)
    throw PreconditionViolated("block seeds must be distinct");
  if (!orbits(gens, n).transitive())
    throw NotTransitive("block systems require a transitive group");
  return block_system_unchecked(gens, n, x, y);
}

PrimitivityResult is_primitive(std::span<const Perm> gens, int n) {
  check_degrees(gens, n);
  if (!orbits(gens, n).transitive())
    throw NotTransitive("primitivity is only defined for transitive groups");
  PrimitivityResult res;
  if (n == 1) {
    res.primitive = true;
    return res;
  }
  for (int y = 2; y <= n; ++y) {
    BlockSystem bs = block_system_unchecked(gens, n, 1, y);
    if (bs.block_size > 1 && bs.block_size < n) {
      res.primitive = false;
      res.witness = std::move(bs);
      return res;
    }
  }
  res.primitive = true;
  return res;
}

namespace {

// True when some power of g is a single p-cycle on the moved points.
bool power_is_p_cycle(const Perm &g, int p) {
  Perm h = g;
  while (!h.is_identity()) {
    const CycleForm cf = cycle_decomposition(h).form;
    if (cf.cycles.size() == 1 && static_cast<int>(cf.cycles[0].size()) == p)
      return true;
    h = compose(h, g);
  }
  return false;
}

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

} // namespace

bool primitivity_shortcut(std::span<const Perm> gens, int n, int p) {
  check_degrees(gens, n);
  if (!is_prime(p))
    throw PreconditionViolated("p=" + std::to_string(p) + " is not prime");
  if (2 * p <= n)
    throw PreconditionViolated("shortcut needs p > n/2");
  if (!orbits(gens, n).transitive())
    throw PreconditionViolated("shortcut needs a transitive group");
  bool have_witness = false;
  for (const Perm &g : gens)
    if (power_is_p_cycle(g, p)) {
      have_witness = true;
      break;
    }
  if (!have_witness)
    throw PreconditionViolated(
        "no generator power supplies the required p-cycle");
  return true;
}

GroupClass jordan_classify(std::span<const Perm> gens, int n,
                           const Perm &p_cycle_witness) {
  check_degrees(gens, n);
  if (p_cycle_witness.degree() != n)
    throw DegreeMismatch("witness degree does not match n");
  const CycleForm wf = cycle_decomposition(p_cycle_witness).form;
  if (wf.cycles.size() != 1)
    throw PreconditionViolated("witness is not a single cycle");
  const int p = static_cast<int>(wf.cycles[0].size());
  if (!is_prime(p))
    throw PreconditionViolated("witness cycle length " + std::to_string(p) +
                               " is not prime");
  if (p > n - 3)
    throw PreconditionViolated("Jordan's criterion needs p <= n-3");
  if (2 * p <= n)
    throw PreconditionViolated("classification path needs p > n/2");
  if (!orbits(gens, n).transitive())
    throw PreconditionViolated("Jordan's criterion needs a transitive group");

  // Membership certificate: the witness must literally be a power of a
  // generator, so containment needs no group-membership machinery.
  bool member = false;
  for (const Perm &g : gens) {
    Perm h = g;
    while (!h.is_identity()) {
      if (h == p_cycle_witness) {
        member = true;
        break;
      }
      h = compose(h, g);
    }
    if (member)
      break;
  }
  if (!member)
    throw PreconditionViolated("witness is not a power of any generator");

  GroupClass cls;
  cls.justification = "jordan";
  bool all_even = true;
  for (const Perm &g : gens)
    if (parity(g) == Parity::odd) {
      all_even = false;
      break;
    }
  cls.kind = all_even ? GroupKind::Alternating : GroupKind::Symmetric;
  return cls;
}

namespace {

struct Bitset {
  std::vector<uint64_t> words;

  explicit Bitset(uint64_t bits) : words((bits + 63) / 64, 0) {}

  bool test_and_set(uint64_t i) {
    uint64_t &w = words[i >> 6];
    const uint64_t m = uint64_t(1) << (i & 63);
    if (w & m)
      return true;
    w |= m;
    return false;
  }
};

// Degrees up to 12: the visited set is a bitset over Lehmer ranks (12! fits
// in 32 bits, 10! is a 453 KB bitset), the work queue stores the images
// themselves so no unranking is needed. The rank is accumulated with a
// popcount over the already-seen value mask.
uint64_t closure_order_ranked(std::span<const Perm> gens, int n,
                              uint64_t cap) {
  std::array<uint32_t, 13> fact;
  fact[0] = 1;
  for (int i = 1; i <= n; ++i)
    fact[i] = fact[i - 1] * static_cast<uint32_t>(i);
  Bitset visited(fact[n]);

  std::vector<std::array<uint8_t, 12>> gi(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (int x = 0; x < n; ++x)
      gi[k][x] = static_cast<uint8_t>(gens[k][x]);

  std::vector<uint8_t> queue;
  queue.reserve(static_cast<size_t>(n) << 12);
  for (int x = 0; x < n; ++x)
    queue.push_back(static_cast<uint8_t>(x));
  visited.test_and_set(0); // identity has rank 0
  uint64_t count = 1;

  uint8_t cur[12];
  uint8_t nxt[12];
  size_t head = 0;
  while (head < queue.size()) {
    // copied out: the inserts below may reallocate the queue
    std::memcpy(cur, queue.data() + head, static_cast<size_t>(n));
    head += n;
    for (const std::array<uint8_t, 12> &g : gi) {
      uint32_t r = 0;
      uint32_t seen = 0;
      for (int i = 0; i < n; ++i) {
        const uint8_t v = g[cur[i]];
        nxt[i] = v;
        const uint32_t below =
            v - std::popcount(seen & ((uint32_t(1) << v) - 1));
        r += below * fact[n - 1 - i];
        seen |= uint32_t(1) << v;
      }
      if (!visited.test_and_set(r)) {
        if (++count > cap)
          throw OrderCapExceeded("closure exceeded cap " +
                                 std::to_string(cap));
        queue.insert(queue.end(), nxt, nxt + n);
      }
    }
  }
  return count;
}

// Open-addressing set of packed permutations (4 bits per point, n <= 16).
struct PackedSet {
  static constexpr uint64_t kEmpty = ~uint64_t(0);
  std::vector<uint64_t> slots;
  uint64_t count = 0;

  PackedSet() : slots(size_t(1) << 16, kEmpty) {}

  static uint64_t mix(uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
  }

  bool insert(uint64_t key) {
    if ((count + 1) * 5 > slots.size() * 3)
      grow();
    const uint64_t mask = slots.size() - 1;
    uint64_t i = mix(key) & mask;
    while (slots[i] != kEmpty) {
      if (slots[i] == key)
        return false;
      i = (i + 1) & mask;
    }
    slots[i] = key;
    ++count;
    return true;
  }

  void grow() {
    std::vector<uint64_t> old = std::move(slots);
    slots.assign(old.size() * 2, kEmpty);
    const uint64_t mask = slots.size() - 1;
    for (uint64_t key : old) {
      if (key == kEmpty)
        continue;
      uint64_t i = mix(key) & mask;
      while (slots[i] != kEmpty)
        i = (i + 1) & mask;
      slots[i] = key;
    }
  }
};

uint64_t closure_order_packed(std::span<const Perm> gens, int n,
                              uint64_t cap) {
  const auto pack = [n](const int32_t *img) {
    uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      key |= static_cast<uint64_t>(img[i]) << (4 * i);
    return key;
  };
  const auto unpack = [n](uint64_t key, int32_t *out) {
    for (int i = 0; i < n; ++i)
      out[i] = static_cast<int32_t>((key >> (4 * i)) & 0xF);
  };

  std::vector<std::vector<int32_t>> gi;
  for (const Perm &g : gens)
    gi.push_back(g.images0());

  PackedSet seen;
  std::vector<uint64_t> queue;
  int32_t id[16];
  for (int i = 0; i < n; ++i)
    id[i] = i;
  seen.insert(pack(id));
  queue.push_back(pack(id));
  uint64_t count = 1;
  int32_t cur[16], nxt[16];
  size_t head = 0;
  while (head < queue.size()) {
    unpack(queue[head++], cur);
    for (const std::vector<int32_t> &g : gi) {
      for (int x = 0; x < n; ++x)
        nxt[x] = g[cur[x]];
      const uint64_t key = pack(nxt);
      if (seen.insert(key)) {
        if (++count > cap)
          throw OrderCapExceeded("closure exceeded cap " +
                                 std::to_string(cap));
        queue.push_back(key);
      }
    }
  }
  return count;
}

struct VecHash {
  size_t operator()(const std::vector<int32_t> &v) const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int32_t x : v) {
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

uint64_t closure_order_generic(std::span<const Perm> gens, int n,
                               uint64_t cap) {
  std::vector<std::vector<int32_t>> gi;
  for (const Perm &g : gens)
    gi.push_back(g.images0());

  std::unordered_set<std::vector<int32_t>, VecHash> seen;
  std::vector<std::vector<int32_t>> queue;
  std::vector<int32_t> id(n);
  for (int i = 0; i < n; ++i)
    id[i] = i;
  seen.insert(id);
  queue.push_back(std::move(id));
  uint64_t count = 1;
  std::vector<int32_t> nxt(n);
  size_t head = 0;
  while (head < queue.size()) {
    const std::vector<int32_t> cur = queue[head++];
    for (const std::vector<int32_t> &g : gi) {
      for (int x = 0; x < n; ++x)
        nxt[x] = g[cur[x]];
      if (seen.insert(nxt).second) {
        if (++count > cap)
          throw OrderCapExceeded("closure exceeded cap " +
                                 std::to_string(cap));
        queue.push_back(nxt);
      }
    }
  }
  return count;
}

} // namespace

uint64_t closure_order(std::span<const Perm> gens, int n, uint64_t cap) {
  check_degrees(gens, n);
  if (cap < 1)
    throw PreconditionViolated("closure cap must be positive");
  if (gens.empty())
    return 1;
  if (n <= 12)
    return closure_order_ranked(gens, n, cap);
  if (n <= 16)
    return closure_order_packed(gens, n, cap);
  return closure_order_generic(gens, n, cap);
}

GroupClass classify_by_closure(std::span<const Perm> gens, int n,
                               uint64_t cap) {
  const uint64_t order = closure_order(gens, n, cap);
  GroupClass cls;
  cls.justification = "closure";
  cls.order = order;
  bool all_even = true;
  for (const Perm &g : gens)
    if (parity(g) == Parity::odd) {
      all_even = false;
      break;
    }
  if (n <= 20) {
    const uint64_t full = factorial_u64(n);
    if (order == full) {
      cls.kind = GroupKind::Symmetric;
      return cls;
    }
    if (all_even && order == full / 2) {
      cls.kind = GroupKind::Alternating;
      return cls;
    }
  }
  cls.kind = GroupKind::Other;
  return cls;
}

} // namespace permcomm
