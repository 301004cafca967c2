#include "permcomm/small_group.hpp"

#include <numeric>
#include <thread>
#include <unordered_map>

#include "permcomm/errors.hpp"

namespace permcomm {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int32_t> &v) const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (int32_t x : v)
      h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    return static_cast<size_t>(h);
  }
};

} // namespace

SmallGroup build_small_group(std::span<const Perm> gens, int n,
                             uint64_t order_cap) {
  if (n < 1)
    throw PreconditionViolated("group degree must be >= 1");
  if (order_cap < 1 || order_cap > 60'000)
    throw PreconditionViolated("group order cap must lie in [1, 60000]");
  for (const Perm &g : gens)
    if (g.degree() != n)
      throw DegreeMismatch("generator degree does not match n");

  SmallGroup G;
  G.degree = n;

  std::unordered_map<std::vector<int32_t>, uint16_t, VecHash> index;
  std::vector<std::vector<int32_t>> elems;
  std::vector<int32_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  index.emplace(id, 0);
  elems.push_back(std::move(id));

  std::vector<std::vector<int32_t>> gi;
  for (const Perm &g : gens)
    gi.push_back(g.images0());

  std::vector<int32_t> nxt(n);
  size_t head = 0;
  while (head < elems.size()) {
    const std::vector<int32_t> cur = elems[head++];
    for (const std::vector<int32_t> &g : gi) {
      for (int x = 0; x < n; ++x)
        nxt[x] = g[cur[x]];
      if (index.emplace(nxt, static_cast<uint16_t>(elems.size())).second) {
        if (elems.size() >= order_cap)
          throw OrderCapExceeded("group order exceeds cap " +
                                 std::to_string(order_cap));
        elems.push_back(nxt);
      }
    }
  }

  const int m = static_cast<int>(elems.size());
  G.order = m;
  G.elements.reserve(m);
  for (const std::vector<int32_t> &img : elems)
    G.elements.push_back(from_images0(std::vector<int32_t>(img)));
  for (const Perm &g : gens) {
    const auto it = index.find(g.images0());
    G.generators.push_back(it->second);
  }

  G.mul.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    const std::vector<int32_t> &ia = elems[a];
    for (int b = 0; b < m; ++b) {
      const std::vector<int32_t> &ib = elems[b];
      for (int x = 0; x < n; ++x)
        nxt[x] = ia[ib[x]]; // (a*b)(x) = a(b(x))
      G.mul[static_cast<size_t>(a) * m + b] = index.at(nxt);
    }
  }

  G.inv.resize(m);
  for (int a = 0; a < m; ++a) {
    const std::vector<int32_t> &ia = elems[a];
    for (int x = 0; x < n; ++x)
      nxt[ia[x]] = x;
    G.inv[a] = index.at(nxt);
  }

  G.element_order.resize(m);
  for (int a = 0; a < m; ++a) {
    int ord = 1;
    int k = a;
    while (k != 0) {
      k = G.mul_at(k, a);
      ++ord;
    }
    G.element_order[a] = (a == 0) ? 1 : ord;
  }

  // Conjugacy classes via orbit search under conjugation by the generators.
  G.class_id.assign(m, -1);
  std::vector<uint16_t> stack;
  for (int e = 0; e < m; ++e) {
    if (G.class_id[e] != -1)
      continue;
    const int32_t cid = G.class_count++;
    G.class_id[e] = cid;
    stack.assign(1, static_cast<uint16_t>(e));
    while (!stack.empty()) {
      const uint16_t x = stack.back();
      stack.pop_back();
      for (const uint16_t g : G.generators) {
        const uint16_t y = G.mul_at(G.mul_at(g, x), G.inv[g]);
        if (G.class_id[y] == -1) {
          G.class_id[y] = cid;
          stack.push_back(y);
        }
      }
    }
  }
  return G;
}

namespace {

// Closure of {a, b} by left multiplication: the two table rows touched stay
// cache-resident. Early out once the size exceeds the largest proper
// divisor of |G| (subgroup orders divide |G|).
struct PairTester {
  const SmallGroup &G;
  int m;
  uint64_t largest_proper_divisor;
  std::vector<uint32_t> stamp;
  std::vector<uint16_t> queue;
  uint32_t epoch = 0;

  explicit PairTester(const SmallGroup &group)
      : G(group), m(group.order), stamp(group.order, 0),
        queue(group.order) {
    int spf = m;
    for (int d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        spf = d;
        break;
      }
    largest_proper_divisor = (m == 1) ? 0 : uint64_t(m) / spf;
  }

  bool generates(int a, int b) {
    ++epoch;
    const uint16_t *row_a = G.mul.data() + static_cast<size_t>(a) * m;
    const uint16_t *row_b = G.mul.data() + static_cast<size_t>(b) * m;
    uint32_t size = 0;
    uint32_t head = 0;
    const auto push = [&](uint16_t x) {
      if (stamp[x] != epoch) {
        stamp[x] = epoch;
        queue[size++] = x;
      }
    };
    push(static_cast<uint16_t>(a));
    push(static_cast<uint16_t>(b));
    while (head < size) {
      if (size > largest_proper_divisor)
        return true;
      const uint16_t x = queue[head++];
      push(row_a[x]);
      push(row_b[x]);
    }
    return size == static_cast<uint32_t>(m);
  }
};

} // namespace

PairSet generating_pairs(const SmallGroup &G, int workers) {
  if (workers < 1)
    throw PreconditionViolated("worker count must be >= 1");
  const int m = G.order;
  PairSet pairs;
  pairs.order = m;
  const size_t cells = static_cast<size_t>(m) * m;
  std::vector<uint8_t> flat(cells, 0);

  // <a,b> = <b,a>: only the upper triangle is tested, owner of row a
  // writes both (a,b) and (b,a).
  const auto run_rows = [&](int first_row, int stride) {
    PairTester tester(G);
    for (int a = first_row; a < m; a += stride)
      for (int b = a; b < m; ++b)
        if (tester.generates(a, b)) {
          flat[static_cast<size_t>(a) * m + b] = 1;
          flat[static_cast<size_t>(b) * m + a] = 1;
        }
  };

  const int threads = std::min<int>(workers, m);
  if (threads <= 1) {
    run_rows(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(run_rows, t, threads);
    for (std::thread &t : pool)
      t.join();
  }

  pairs.bits.assign((cells + 63) / 64, 0);
  for (size_t i = 0; i < cells; ++i)
    if (flat[i]) {
      pairs.bits[i >> 6] |= uint64_t(1) << (i & 63);
      ++pairs.count;
    }
  return pairs;
}

} // namespace permcomm
