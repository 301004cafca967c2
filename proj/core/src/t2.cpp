#include "permcomm/t2.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <unordered_map>

#include "permcomm/errors.hpp"
#include "permcomm/group_analysis.hpp"

namespace permcomm {

std::vector<std::pair<uint16_t, uint16_t>>
nielsen_neighbors(const SmallGroup &G, uint16_t a, uint16_t b) {
  if (a >= G.order || b >= G.order)
    throw PreconditionViolated("pair index outside the group");
  const uint16_t ia = G.inv[a], ib = G.inv[b];
  const uint16_t ab = G.mul_at(a, b), ba = G.mul_at(b, a);
  const std::pair<uint16_t, uint16_t> images[7] = {
      {b, a}, {ia, b}, {a, ib}, {ab, b}, {ba, b}, {a, ab}, {a, ba}};
  std::vector<std::pair<uint16_t, uint16_t>> out;
  out.reserve(7);
  for (const auto &img : images)
    if (std::find(out.begin(), out.end(), img) == out.end())
      out.push_back(img);
  return out;
}

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

using ElementIndex =
    std::unordered_map<std::vector<int32_t>, uint16_t, VecHash>;

ElementIndex element_index(const SmallGroup &G) {
  ElementIndex index;
  index.reserve(G.order);
  for (int e = 0; e < G.order; ++e)
    index.emplace(G.elements[e].images0(), static_cast<uint16_t>(e));
  return index;
}

// The natural alternating group: order n!/2 with every generator even.
bool natural_alternating(const SmallGroup &G) {
  const int n = G.degree;
  if (n < 3 || n > 12)
    return false;
  if (static_cast<uint64_t>(G.order) != factorial_u64(n) / 2)
    return false;
  for (const uint16_t g : G.generators)
    if (parity(G.elements[g]) == Parity::odd)
      return false;
  return true;
}

// Index map of e -> w e w^-1; nullopt when w does not normalize G.
std::optional<std::vector<uint16_t>>
conjugation_map(const SmallGroup &G, const ElementIndex &index,
                const std::vector<int32_t> &w) {
  const int n = G.degree;
  std::vector<int32_t> winv(n), img(n);
  for (int x = 0; x < n; ++x)
    winv[w[x]] = x;
  std::vector<uint16_t> map(G.order);
  for (int e = 0; e < G.order; ++e) {
    const std::vector<int32_t> ie = G.elements[e].images0();
    for (int x = 0; x < n; ++x)
      img[x] = w[ie[winv[x]]];
    const auto it = index.find(img);
    if (it == index.end())
      return std::nullopt;
    map[e] = it->second;
  }
  return map;
}

std::vector<std::vector<uint16_t>>
automorphisms_by_conjugation(const SmallGroup &G) {
  const ElementIndex index = element_index(G);
  std::vector<int32_t> w(G.degree);
  std::iota(w.begin(), w.end(), 0);
  std::vector<std::vector<uint16_t>> maps;
  do {
    auto map = conjugation_map(G, index, w);
    if (map)
      maps.push_back(std::move(*map));
  } while (std::next_permutation(w.begin(), w.end()));
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  return maps;
}

// Breadth-first spanning tree of the Cayley graph over the build
// generators: assignment order for the generator-image search.
struct SpanningTree {
  std::vector<uint16_t> vertex; // discovery order, vertex[0] = identity
  std::vector<uint16_t> parent; // by position in `vertex`
  std::vector<uint16_t> gen;    // generator index used for the tree edge
};

SpanningTree spanning_tree(const SmallGroup &G) {
  SpanningTree tree;
  std::vector<char> seen(G.order, 0);
  tree.vertex.push_back(0);
  tree.parent.push_back(0);
  tree.gen.push_back(0);
  seen[0] = 1;
  for (size_t head = 0; head < tree.vertex.size(); ++head) {
    const uint16_t e = tree.vertex[head];
    for (size_t j = 0; j < G.generators.size(); ++j) {
      const uint16_t child = G.mul_at(e, G.generators[j]);
      if (!seen[child]) {
        seen[child] = 1;
        tree.vertex.push_back(child);
        tree.parent.push_back(e);
        tree.gen.push_back(static_cast<uint16_t>(j));
      }
    }
  }
  if (tree.vertex.size() != static_cast<size_t>(G.order))
    throw PreconditionViolated(
        "stored generators do not generate the group");
  return tree;
}

std::vector<std::vector<uint16_t>>
automorphisms_by_image_search(const SmallGroup &G) {
  const int m = G.order;
  const size_t k = G.generators.size();
  const SpanningTree tree = spanning_tree(G);

  // Candidate images per generator: matching element order.
  std::vector<std::vector<uint16_t>> candidates(k);
  uint64_t space = 1;
  for (size_t j = 0; j < k; ++j) {
    const int32_t ord = G.element_order[G.generators[j]];
    for (int e = 0; e < m; ++e)
      if (G.element_order[e] == ord)
        candidates[j].push_back(static_cast<uint16_t>(e));
    space *= candidates[j].size();
    if (space > 2'000'000)
      throw SearchBudgetExceeded(
          "automorphism candidate space exceeds 2e6 tuples");
  }

  std::vector<std::vector<uint16_t>> maps;
  std::vector<uint16_t> images(k);
  std::vector<uint16_t> phi(m);
  std::vector<uint32_t> hit(m, 0);
  uint32_t epoch = 0;

  const auto attempt = [&]() {
    // Extend along the spanning tree, checking injectivity on the fly.
    ++epoch;
    phi[0] = 0;
    hit[0] = epoch;
    for (size_t i = 1; i < tree.vertex.size(); ++i) {
      const uint16_t value =
          G.mul_at(phi[tree.parent[i]], images[tree.gen[i]]);
      if (hit[value] == epoch)
        return; // not injective
      hit[value] = epoch;
      phi[tree.vertex[i]] = value;
    }
    // Homomorphism proof: every Cayley edge must commute with phi.
    for (int e = 0; e < m; ++e)
      for (size_t j = 0; j < k; ++j)
        if (phi[G.mul_at(e, G.generators[j])] !=
            G.mul_at(phi[e], images[j]))
          return;
    maps.push_back(phi);
  };

  if (k == 0)
    return maps;
  std::vector<size_t> pos(k, 0);
  for (;;) {
    for (size_t j = 0; j < k; ++j)
      images[j] = candidates[j][pos[j]];
    attempt();
    size_t j = k;
    while (j > 0) {
      --j;
      if (++pos[j] < candidates[j].size())
        break;
      pos[j] = 0;
      if (j == 0)
        return maps;
    }
  }
}

} // namespace

std::vector<std::vector<uint16_t>> automorphisms(const SmallGroup &G) {
  if (G.order == 1)
    return {std::vector<uint16_t>{0}};
  if (natural_alternating(G) && G.degree != 6)
    return automorphisms_by_conjugation(G);
  return automorphisms_by_image_search(G);
}

namespace {

struct FlatUnionFind {
  std::vector<uint32_t> parent;

  explicit FlatUnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(uint32_t a, uint32_t b) {
    const uint32_t ra = find(a), rb = find(b);
    if (ra != rb)
      parent[std::max(ra, rb)] = std::min(ra, rb);
  }
};

std::vector<int> cycle_type(const Perm &p) {
  const CycleForm form = cycle_decomposition(p).form;
  std::vector<int> type;
  int moved = 0;
  for (const std::vector<int> &cyc : form.cycles) {
    type.push_back(static_cast<int>(cyc.size()));
    moved += static_cast<int>(cyc.size());
  }
  type.insert(type.end(), p.degree() - moved, 1);
  std::sort(type.begin(), type.end());
  return type;
}

// Conjugation maps by (1 2) and (1 2 ... n) generate all of Aut(A_n) for
// natural alternating groups of degree != 6.
std::vector<std::vector<uint16_t>>
alternating_aut_generators(const SmallGroup &G) {
  const ElementIndex index = element_index(G);
  const int n = G.degree;
  std::vector<int32_t> swap01(n), cycle(n);
  std::iota(swap01.begin(), swap01.end(), 0);
  std::swap(swap01[0], swap01[1]);
  for (int x = 0; x < n; ++x)
    cycle[x] = (x + 1) % n;
  std::vector<std::vector<uint16_t>> maps;
  for (const std::vector<int32_t> &w : {swap01, cycle}) {
    auto map = conjugation_map(G, index, w);
    if (!map)
      throw PreconditionViolated("internal: conjugation left the group");
    maps.push_back(std::move(*map));
  }
  return maps;
}

} // namespace

PairCensus pair_census(const SmallGroup &G, const CensusOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  const int m = G.order;
  const size_t cells = static_cast<size_t>(m) * m;
  if (cells > 50'000'000)
    throw Refused("census over " + std::to_string(cells) +
                  " pairs is beyond desk scale");
  if (cells > 1'000'000 && !options.long_running_ok)
    throw Refused("census over " + std::to_string(cells) +
                  " pairs needs long_running_ok");

  const PairSet pairs = generating_pairs(G, options.workers);
  if (pairs.count == 0)
    throw PreconditionViolated("the group has no generating pairs");

  PairCensus census;
  census.generating_pairs = pairs.count;

  if (options.include_commutator_classes) {
    std::vector<char> class_seen(G.class_count, 0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        if (!pairs.test(a, b))
          continue;
        const uint16_t comm = G.mul_at(G.mul_at(a, b),
                                       G.mul_at(G.inv[a], G.inv[b]));
        class_seen[G.class_id[comm]] = 1;
      }
    std::set<std::vector<int>> ambient_types;
    std::vector<char> rep_done(G.class_count, 0);
    for (int e = 0; e < m; ++e) {
      const int32_t cid = G.class_id[e];
      if (rep_done[cid] || !class_seen[cid])
        continue;
      rep_done[cid] = 1;
      ++census.comm_classes_g;
      ambient_types.insert(cycle_type(G.elements[e]));
    }
    census.comm_classes_ambient = ambient_types.size();
  }

  const std::vector<std::vector<uint16_t>> aut_edges =
      (natural_alternating(G) && G.degree != 6)
          ? alternating_aut_generators(G)
          : automorphisms(G);

  FlatUnionFind t2(cells);
  FlatUnionFind aut(cells);
  for (int a = 0; a < m; ++a) {
    const size_t row = static_cast<size_t>(a) * m;
    for (int b = 0; b < m; ++b) {
      if (!pairs.test(a, b))
        continue;
      const uint32_t i = static_cast<uint32_t>(row + b);
      for (const auto &[na, nb] : nielsen_neighbors(
               G, static_cast<uint16_t>(a), static_cast<uint16_t>(b)))
        t2.unite(i, static_cast<uint32_t>(na) * m + nb);
      for (const std::vector<uint16_t> &phi : aut_edges) {
        const uint32_t j =
            static_cast<uint32_t>(phi[a]) * m + phi[b];
        t2.unite(i, j);
        aut.unite(i, j);
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    const size_t row = static_cast<size_t>(a) * m;
    for (int b = 0; b < m; ++b) {
      if (!pairs.test(a, b))
        continue;
      const uint32_t i = static_cast<uint32_t>(row + b);
      census.t2_systems += (t2.find(i) == i);
      census.aut_orbits += (aut.find(i) == i);
    }
  }

  census.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return census;
}

} // namespace permcomm
