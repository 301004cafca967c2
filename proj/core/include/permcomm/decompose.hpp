#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permcomm/counting.hpp"
#include "permcomm/perm.hpp"

namespace permcomm {

struct PrimeWindow {
  int n = 0;
  int lo = 0; // floor(3n/4)
  int hi = 0; // n - 3
  std::optional<int> p;
};

// Smallest prime in [floor(3n/4), n-3], or none when the window is empty.
PrimeWindow prime_in_window(int n);

struct TwoCycles {
  Perm c1;
  Perm c2;
};

inline constexpr uint64_t kDefaultTrialCap = 10'000'000;

// Splits an even mu into a product of two l-cycles, mu = c1*c2. Exhaustive
// over l-cycles for degree <= 8 (nullopt proves nonexistence); seeded random
// sampling above that (SearchExhausted past trial_cap, never nullopt).
std::optional<TwoCycles> two_lcycle_decompose(const Perm &mu, int l,
                                              uint64_t seed,
                                              uint64_t trial_cap =
                                                  kDefaultTrialCap);

// The permutation mapping cycle c1 onto cycle c2: writing both in canonical
// rotation, a_i -> b_{i+rotation mod l}; points off the supports are matched
// in increasing order. Conjugation is verified before returning.
Perm conjugator_for_cycles(const Perm &c1, const Perm &c2, int n,
                           int rotation = 0);

// Drops the cycles of tau supported entirely inside [p+1, n]. The commutator
// with (1 ... p) is unchanged.
std::pair<Perm, CycleForm> prune_tail_cycles(const Perm &tau, int p);

// Splices the tail points fixed by tau into the cycle through the smallest
// head point that tau sends above p: tau' = tau * (y y_1 ... y_s).
Perm absorb_fixed_points(const Perm &tau, int p);

struct ParityPartner {
  Perm tau_even;
  Perm tau_odd;
  Perm transposition; // invert(tau_even) * tau_odd
};

// The pair {tau, tau*(y y')} labeled by parity, where y, y' are the images
// of the two smallest head points that tau sends above p.
ParityPartner parity_partner(const Perm &tau, int p);

struct TraceStep {
  std::string step;
  std::string before;
  std::string after;
};

struct Certificate {
  int n = 1;
  int p = 0;
  Perm mu{1};
  Perm sigma{1};
  Perm tau_even{1};
  Perm tau_odd{1};
  Perm transposition{1};
  uint64_t seed = 0;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<TraceStep> trace;
};

struct PipelineOptions {
  uint64_t seed = 0;
  std::optional<int> force_p;
  bool verify_closure = false;
  uint64_t trial_cap = kDefaultTrialCap;
};

// Full constructive pipeline: Bertram split, canonicalization, tail pruning,
// fixed-point absorption, parity partner, relabeling, classification.
Certificate run_pipeline(const Perm &mu, const PipelineOptions &options = {});

struct VerifyReport {
  std::vector<std::pair<std::string, bool>> results;
  bool all_passed = false;
};

// Recomputes every certificate check from the raw permutations; stored
// booleans are never trusted. deep additionally runs the closure oracle
// when the full group fits under the default cap.
VerifyReport verify_certificate(const Certificate &cert, bool deep = false);

struct CoverageReport {
  int n = 0;
  int p = 0;
  uint64_t seed = 0;
  uint64_t trials = 0;
  uint64_t covered = 0;         // samples with |supp| >= p+2
  uint64_t certificates_ok = 0; // covered samples that verified
  BigRational fraction;         // covered / trials
};

// Samples uniform elements of the alternating group and runs the pipeline
// on every covered sample.
CoverageReport sample_coverage(int n, uint64_t trials, uint64_t seed);

// Fixed-field-order JSON (byte-deterministic given the same certificate).
std::string certificate_to_json(const Certificate &cert);
Certificate certificate_from_json(const std::string &text);

} // namespace permcomm
