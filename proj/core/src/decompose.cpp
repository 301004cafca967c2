#include "permcomm/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "permcomm/errors.hpp"
#include "permcomm/group_analysis.hpp"
#include "permcomm/random.hpp"

namespace permcomm {

namespace {

bool is_prime(int p) {
  if (p < 2)
    return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

bool is_l_cycle(const Perm &t, int l) {
  const int n = t.degree();
  int moved = 0;
  int first = -1;
  for (int x = 0; x < n; ++x)
    if (t[x] != x) {
      ++moved;
      if (first < 0)
        first = x;
    }
  if (moved != l || first < 0)
    return false;
  int len = 0;
  int y = first;
  do {
    y = t[y];
    ++len;
  } while (y != first && len <= l);
  return len == l;
}

int support_size(const Perm &t) {
  int moved = 0;
  for (int x = 0; x < t.degree(); ++x)
    moved += (t[x] != x);
  return moved;
}

Perm cycle_from_points(int n, const std::vector<int32_t> &pts0) {
  std::vector<int32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  const size_t l = pts0.size();
  for (size_t i = 0; i < l; ++i)
    img[pts0[i]] = pts0[(i + 1) % l];
  return from_images0(std::move(img));
}

Perm canonical_p_cycle(int n, int p) {
  std::vector<int32_t> pts(p);
  std::iota(pts.begin(), pts.end(), 0);
  return cycle_from_points(n, pts);
}

Perm conj(const Perm &g, const Perm &x) {
  return compose(compose(g, x), invert(g));
}

} // namespace

PrimeWindow prime_in_window(int n) {
  if (n < 1)
    throw PreconditionViolated("prime_in_window requires n >= 1");
  PrimeWindow w;
  w.n = n;
  w.lo = (3 * n) / 4;
  w.hi = n - 3;
  for (int p = std::max(w.lo, 2); p <= w.hi; ++p)
    if (is_prime(p)) {
      w.p = p;
      break;
    }
  return w;
}

namespace {

std::optional<TwoCycles> two_lcycle_exhaustive(const Perm &mu, int l) {
  const int n = mu.degree();
  // l-subsets in lexicographic order, cycles within a subset with the
  // minimum first and the rest in lexicographic rotation order.
  std::vector<int32_t> comb(l);
  std::iota(comb.begin(), comb.end(), 0);
  for (;;) {
    std::vector<int32_t> rest(comb.begin() + 1, comb.end());
    do {
      std::vector<int32_t> pts;
      pts.reserve(l);
      pts.push_back(comb[0]);
      pts.insert(pts.end(), rest.begin(), rest.end());
      const Perm c1 = cycle_from_points(n, pts);
      const Perm c2 = compose(invert(c1), mu);
      if (is_l_cycle(c2, l))
        return TwoCycles{c1, c2};
    } while (std::next_permutation(rest.begin(), rest.end()));
    // advance the combination
    int i = l - 1;
    while (i >= 0 && comb[i] == n - l + i)
      --i;
    if (i < 0)
      break;
    ++comb[i];
    for (int j = i + 1; j < l; ++j)
      comb[j] = comb[j - 1] + 1;
  }
  return std::nullopt;
}

std::optional<TwoCycles> two_lcycle_randomized(const Perm &mu, int l,
                                               uint64_t seed,
                                               uint64_t trial_cap) {
  const int n = mu.degree();
  const std::vector<int32_t> mu0 = mu.images0();
  Rng rng(seed);
  std::vector<int32_t> pool(n), ic1(n);
  for (uint64_t trial = 0; trial < trial_cap; ++trial) {
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < l; ++i) {
      const int j =
          i + static_cast<int>(uniform_below(rng, uint64_t(n - i)));
      std::swap(pool[i], pool[j]);
    }
    // inverse of the cycle pool[0] -> pool[1] -> ... -> pool[l-1] -> pool[0]
    std::iota(ic1.begin(), ic1.end(), 0);
    for (int i = 0; i < l; ++i)
      ic1[pool[(i + 1) % l]] = pool[i];
    // c2 = invert(c1) * mu must be an l-cycle
    int moved = 0, first = -1;
    for (int x = 0; x < n; ++x)
      if (ic1[mu0[x]] != x) {
        ++moved;
        if (first < 0)
          first = x;
      }
    if (moved != l)
      continue;
    int len = 0, y = first;
    do {
      y = ic1[mu0[y]];
      ++len;
    } while (y != first && len <= l);
    if (len != l)
      continue;
    std::vector<int32_t> pts(pool.begin(), pool.begin() + l);
    const Perm c1 = cycle_from_points(n, pts);
    const Perm c2 = compose(invert(c1), mu);
    return TwoCycles{c1, c2};
  }
  throw SearchExhausted("no two-" + std::to_string(l) +
                        "-cycle split found within " +
                        std::to_string(trial_cap) + " trials");
}

} // namespace

std::optional<TwoCycles> two_lcycle_decompose(const Perm &mu, int l,
                                              uint64_t seed,
                                              uint64_t trial_cap) {
  const int n = mu.degree();
  if (l < 2 || l > n)
    throw PreconditionViolated("cycle length must satisfy 2 <= l <= n");
  if (parity(mu) != Parity::even)
    throw NotEvenPermutation("two-cycle splits exist only for even input");
  if (n <= 8)
    return two_lcycle_exhaustive(mu, l);
  return two_lcycle_randomized(mu, l, seed, trial_cap);
}

Perm conjugator_for_cycles(const Perm &c1, const Perm &c2, int n,
                           int rotation) {
  if (c1.degree() != n || c2.degree() != n)
    throw DegreeMismatch("cycle degrees must match n");
  const CycleForm f1 = cycle_decomposition(c1).form;
  const CycleForm f2 = cycle_decomposition(c2).form;
  if (f1.cycles.size() != 1 || f2.cycles.size() != 1)
    throw PreconditionViolated("conjugator inputs must be single cycles");
  const std::vector<int> &a = f1.cycles[0];
  const std::vector<int> &b = f2.cycles[0];
  if (a.size() != b.size())
    throw LengthMismatch("cycle lengths " + std::to_string(a.size()) +
                         " and " + std::to_string(b.size()) + " differ");
  const int l = static_cast<int>(a.size());
  if (rotation < 0 || rotation >= l)
    throw PreconditionViolated("rotation must lie in [0, l)");

  std::vector<int32_t> img(n, -1);
  std::vector<char> a_supp(n, 0), b_supp(n, 0);
  for (int i = 0; i < l; ++i) {
    img[a[i] - 1] = b[(i + rotation) % l] - 1;
    a_supp[a[i] - 1] = 1;
    b_supp[b[i] - 1] = 1;
  }
  // off-support points matched in increasing order
  int target = 0;
  for (int x = 0; x < n; ++x) {
    if (a_supp[x])
      continue;
    while (b_supp[target])
      ++target;
    img[x] = target++;
  }
  Perm tau = from_images0(std::move(img));
  if (!(conj(tau, c1) == c2))
    throw PreconditionViolated("conjugator construction failed to verify");
  return tau;
}

std::pair<Perm, CycleForm> prune_tail_cycles(const Perm &tau, int p) {
  const int n = tau.degree();
  if (p < 1 || p >= n)
    throw PreconditionViolated("prune requires 1 <= p < degree");
  const CycleForm form = cycle_decomposition(tau).form;
  CycleForm removed;
  removed.degree = n;
  std::vector<int32_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  for (const std::vector<int> &cyc : form.cycles) {
    if (cyc[0] > p) { // cycles are min-first, so min > p means tail-only
      removed.cycles.push_back(cyc);
      continue;
    }
    const int l = static_cast<int>(cyc.size());
    for (int i = 0; i < l; ++i)
      img[cyc[i] - 1] = cyc[(i + 1) % l] - 1;
  }
  return {from_images0(std::move(img)), removed};
}

Perm absorb_fixed_points(const Perm &tau, int p) {
  const int n = tau.degree();
  if (p < 1 || p >= n)
    throw PreconditionViolated("absorb requires 1 <= p < degree");
  for (const std::vector<int> &cyc : cycle_decomposition(tau).form.cycles)
    if (cyc[0] > p)
      throw PreconditionViolated(
          "absorb requires every cycle of tau to meet [1, p]");
  int x = -1;
  for (int i = 0; i < p; ++i)
    if (tau[i] >= p) {
      x = i;
      break;
    }
  if (x < 0)
    throw InsufficientSupport("no point of [1, p] is sent above p");
  std::vector<int32_t> splice{tau[x]}; // y = tau(x)
  for (int z = p; z < n; ++z)
    if (tau[z] == z)
      splice.push_back(z);
  if (splice.size() == 1)
    return tau;
  return compose(tau, cycle_from_points(n, splice));
}

ParityPartner parity_partner(const Perm &tau, int p) {
  const int n = tau.degree();
  if (p < 1 || p >= n)
    throw PreconditionViolated("parity partner requires 1 <= p < degree");
  int x1 = -1, x2 = -1;
  for (int i = 0; i < p; ++i)
    if (tau[i] >= p) {
      if (x1 < 0)
        x1 = i;
      else {
        x2 = i;
        break;
      }
    }
  if (x2 < 0)
    throw InsufficientSupport(
        "fewer than two points of [1, p] are sent above p");
  const Perm t = cycle_from_points(n, {tau[x1], tau[x2]});
  const Perm partner = compose(tau, t);
  ParityPartner out{tau, partner, t};
  if (parity(tau) == Parity::odd)
    std::swap(out.tau_even, out.tau_odd);
  return out;
}

namespace {

void append_check(Certificate &cert, const std::string &name, bool value) {
  cert.checks.emplace_back(name, value);
}

bool jordan_kind_is(std::span<const Perm> gens, int n, const Perm &witness,
                    GroupKind expected) {
  try {
    return jordan_classify(gens, n, witness).kind == expected;
  } catch (const Error &) {
    return false;
  }
}

bool primitive_or_false(std::span<const Perm> gens, int n) {
  try {
    return is_primitive(gens, n).primitive;
  } catch (const Error &) {
    return false;
  }
}

} // namespace

Certificate run_pipeline(const Perm &mu, const PipelineOptions &options) {
  const int n = mu.degree();
  if (n < 10)
    throw UnsupportedDegree("the construction needs degree >= 10");
  const PrimeWindow window = prime_in_window(n);
  int p;
  if (options.force_p) {
    p = *options.force_p;
    if (!is_prime(p) || p < window.lo || p > window.hi)
      throw InvalidWindow("forced p=" + std::to_string(p) +
                          " is not a prime in [" + std::to_string(window.lo) +
                          ", " + std::to_string(window.hi) + "]");
  } else {
    if (!window.p)
      throw UnsupportedDegree("no prime in [" + std::to_string(window.lo) +
                              ", " + std::to_string(window.hi) +
                              "] at n=" + std::to_string(n));
    p = *window.p;
  }
  if (parity(mu) != Parity::even)
    throw NotEvenPermutation("mu must be an even permutation");
  if (support_size(mu) < p + 2)
    throw InsufficientSupport("mu moves " + std::to_string(support_size(mu)) +
                              " points; the construction needs at least " +
                              std::to_string(p + 2));

  Certificate cert;
  cert.n = n;
  cert.p = p;
  cert.mu = mu;
  cert.seed = options.seed;

  // Step 1: Bertram split mu = c1 * c2 into two p-cycles.
  const auto split =
      two_lcycle_decompose(mu, p, options.seed, options.trial_cap);
  const Perm &c1 = split->c1;
  const Perm &c2 = split->c2;
  cert.trace.push_back({"bertram", format_cycles(mu),
                        "c1=" + format_cycles(c1) +
                            ", c2=" + format_cycles(c2)});

  // Step 2: tau0 conjugates invert(c1) to c2, so [c1, tau0] = mu.
  const Perm tau0 = conjugator_for_cycles(invert(c1), c2, n, 0);
  if (!(commutator(c1, tau0) == mu))
    throw PreconditionViolated("internal: Bertram commutator mismatch");

  // Step 3: relabel so sigma becomes the canonical cycle (1 ... p).
  const Perm sigma_c = canonical_p_cycle(n, p);
  const Perm g = conjugator_for_cycles(c1, sigma_c, n, 0);
  const Perm mu_c = conj(g, mu);
  const Perm tau_c = conj(g, tau0);
  if (!(commutator(sigma_c, tau_c) == mu_c))
    throw PreconditionViolated("internal: canonicalization broke commutator");
  cert.trace.push_back({"canonicalize",
                        "sigma=" + format_cycles(c1) +
                            ", tau=" + format_cycles(tau0),
                        "sigma=" + format_cycles(sigma_c) +
                            ", tau=" + format_cycles(tau_c)});

  // Step 4: drop tail-only cycles of tau.
  const auto [tau_pruned, removed] = prune_tail_cycles(tau_c, p);
  if (!(commutator(sigma_c, tau_pruned) == mu_c))
    throw PreconditionViolated("internal: pruning changed the commutator");
  cert.trace.push_back({"prune", format_cycles(tau_c),
                        "tau=" + format_cycles(tau_pruned) + ", removed=" +
                            (removed.cycles.empty() ? std::string("()")
                                                    : format_cycles(removed))});

  // Step 5: splice fixed tail points into a head-crossing cycle.
  const Perm tau_abs = absorb_fixed_points(tau_pruned, p);
  if (!(commutator(sigma_c, tau_abs) == mu_c))
    throw PreconditionViolated("internal: absorption changed the commutator");
  if (!transitivity_criterion(p, n, tau_abs))
    throw PreconditionViolated("internal: absorbed tau is not transitive");
  cert.trace.push_back(
      {"absorb", format_cycles(tau_pruned), format_cycles(tau_abs)});

  // Step 6: produce both parities.
  const ParityPartner pp = parity_partner(tau_abs, p);
  for (const Perm *t : {&pp.tau_even, &pp.tau_odd}) {
    if (!(commutator(sigma_c, *t) == mu_c))
      throw PreconditionViolated("internal: parity toggle changed commutator");
    if (!transitivity_criterion(p, n, *t))
      throw PreconditionViolated("internal: parity candidate not transitive");
  }
  cert.trace.push_back({"parity_toggle", format_cycles(tau_abs),
                        "tau_even=" + format_cycles(pp.tau_even) +
                            ", tau_odd=" + format_cycles(pp.tau_odd) +
                            ", transposition=" + format_cycles(pp.transposition)});

  // Step 7: conjugate everything back to the original labels.
  const Perm g_inv = invert(g);
  cert.sigma = conj(g_inv, sigma_c);
  cert.tau_even = conj(g_inv, pp.tau_even);
  cert.tau_odd = conj(g_inv, pp.tau_odd);
  cert.transposition = conj(g_inv, pp.transposition);

  const Perm gens_even[] = {cert.sigma, cert.tau_even};
  const Perm gens_odd[] = {cert.sigma, cert.tau_odd};
  append_check(cert, "commutator_even",
               commutator(cert.sigma, cert.tau_even) == mu);
  append_check(cert, "commutator_odd",
               commutator(cert.sigma, cert.tau_odd) == mu);
  append_check(cert, "sigma_is_p_cycle",
               is_l_cycle(cert.sigma, p) && is_prime(p));
  append_check(cert, "parities",
               parity(cert.tau_even) == Parity::even &&
                   parity(cert.tau_odd) == Parity::odd);
  append_check(cert, "transposition_quotient",
               compose(invert(cert.tau_even), cert.tau_odd) ==
                       cert.transposition &&
                   is_l_cycle(cert.transposition, 2));
  append_check(cert, "transitive_even", orbits(gens_even, n).transitive());
  append_check(cert, "transitive_odd", orbits(gens_odd, n).transitive());
  append_check(cert, "primitive",
               primitive_or_false(gens_even, n) &&
                   primitive_or_false(gens_odd, n));
  append_check(cert, "class_even",
               jordan_kind_is(gens_even, n, cert.sigma,
                              GroupKind::Alternating));
  append_check(cert, "class_odd",
               jordan_kind_is(gens_odd, n, cert.sigma, GroupKind::Symmetric));
  if (options.verify_closure && n <= 10) {
    const uint64_t full = factorial_u64(n);
    append_check(cert, "closure_verified",
                 closure_order(gens_even, n) == full / 2 &&
                     closure_order(gens_odd, n) == full);
  }

  for (const auto &[name, ok] : cert.checks)
    if (!ok)
      throw PreconditionViolated("internal: pipeline check '" + name +
                                 "' failed");
  return cert;
}

VerifyReport verify_certificate(const Certificate &cert, bool deep) {
  VerifyReport report;
  const int n = cert.n;
  const int p = cert.p;
  const auto guarded = [&](const std::string &name, auto &&fn) {
    bool ok = false;
    try {
      ok = fn();
    } catch (const Error &) {
      ok = false;
    }
    report.results.emplace_back(name, ok);
  };

  const bool shape_ok = cert.mu.degree() == n && cert.sigma.degree() == n &&
                        cert.tau_even.degree() == n &&
                        cert.tau_odd.degree() == n &&
                        cert.transposition.degree() == n && p >= 2 && p < n;
  if (!shape_ok) {
    for (const char *name :
         {"commutator_even", "commutator_odd", "sigma_is_p_cycle", "parities",
          "transposition_quotient", "transitive_even", "transitive_odd",
          "primitive", "class_even", "class_odd"})
      report.results.emplace_back(name, false);
    report.all_passed = false;
    return report;
  }

  const Perm gens_even[] = {cert.sigma, cert.tau_even};
  const Perm gens_odd[] = {cert.sigma, cert.tau_odd};
  guarded("commutator_even", [&] {
    return commutator(cert.sigma, cert.tau_even) == cert.mu;
  });
  guarded("commutator_odd", [&] {
    return commutator(cert.sigma, cert.tau_odd) == cert.mu;
  });
  guarded("sigma_is_p_cycle",
          [&] { return is_l_cycle(cert.sigma, p) && is_prime(p); });
  guarded("parities", [&] {
    return parity(cert.tau_even) == Parity::even &&
           parity(cert.tau_odd) == Parity::odd &&
           parity(cert.mu) == Parity::even;
  });
  guarded("transposition_quotient", [&] {
    return compose(invert(cert.tau_even), cert.tau_odd) ==
               cert.transposition &&
           is_l_cycle(cert.transposition, 2);
  });
  guarded("transitive_even",
          [&] { return orbits(gens_even, n).transitive(); });
  guarded("transitive_odd", [&] { return orbits(gens_odd, n).transitive(); });
  guarded("primitive", [&] {
    return is_primitive(gens_even, n).primitive &&
           is_primitive(gens_odd, n).primitive;
  });
  guarded("class_even", [&] {
    return jordan_classify(gens_even, n, cert.sigma).kind ==
           GroupKind::Alternating;
  });
  guarded("class_odd", [&] {
    return jordan_classify(gens_odd, n, cert.sigma).kind ==
           GroupKind::Symmetric;
  });
  if (deep && n <= 10) {
    guarded("closure_verified", [&] {
      const uint64_t full = factorial_u64(n);
      return closure_order(gens_even, n) == full / 2 &&
             closure_order(gens_odd, n) == full;
    });
  }

  report.all_passed = true;
  for (const auto &[name, ok] : report.results)
    report.all_passed = report.all_passed && ok;
  return report;
}

CoverageReport sample_coverage(int n, uint64_t trials, uint64_t seed) {
  if (trials < 1)
    throw PreconditionViolated("sample_coverage requires trials >= 1");
  const PrimeWindow window = prime_in_window(n);
  if (!window.p)
    throw UnsupportedDegree("no prime in [" + std::to_string(window.lo) +
                            ", " + std::to_string(window.hi) +
                            "] at n=" + std::to_string(n));
  const int p = *window.p;
  CoverageReport report;
  report.n = n;
  report.p = p;
  report.seed = seed;
  report.trials = trials;
  Rng rng(seed);
  for (uint64_t i = 0; i < trials; ++i) {
    const Perm mu = random_even_perm(rng, n);
    if (support_size(mu) < p + 2)
      continue;
    ++report.covered;
    PipelineOptions options;
    options.seed = rng();
    const Certificate cert = run_pipeline(mu, options);
    if (verify_certificate(cert, false).all_passed)
      ++report.certificates_ok;
  }
  report.fraction = BigRational(BigCount(report.covered), BigCount(trials));
  return report;
}

} // namespace permcomm
