#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcomm {

using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Cached partition-style counts up to a fixed bound:
//   P(n)  unrestricted partitions (Euler pentagonal recurrence),
//   Q(n)  partitions into distinct odd parts,
//   R(n)  partitions into distinct odd parts >= 3.
class PartitionTable {
public:
  explicit PartitionTable(int max_n);

  int max_n() const noexcept { return static_cast<int>(p_.size()) - 1; }
  const BigCount &P(int n) const;
  const BigCount &Q(int n) const;
  const BigCount &R(int n) const;

private:
  std::vector<BigCount> p_, q_, r_;
};

BigCount partition_p(int n);

// Partitions of n into distinct odd parts, each >= min_part (odd).
BigCount partition_distinct_odd(int n, int min_part = 1);

// Conjugacy classes of the alternating group: (P(n) + 3 Q(n)) / 2.
BigCount class_count_alternating(int n);

struct DerangementCounts {
  BigCount a; // all derangements
  BigCount b; // even derangements
  BigCount c; // odd derangements
};

DerangementCounts derangement_counts(int n);

// Even permutations of degree n fixing at most k points:
// sum over i <= k of C(n,i) * b_{n-i}.
BigCount even_fixing_at_most(int n, int k);

// (P(n) - P(n - floor(n/r))) / 2 for a rational ratio r > 4.
BigCount t2_lower_bound(int n, const BigRational &r);

// Parses "5", "4.5" or "9/2" into an exact rational.
BigRational parse_ratio(const std::string &text);

// Exact rational 1 - 2/floor(n/10)!; valid for n >= 33.
BigRational generation_probability_bound(int n);

struct HardyRamanujanDiagnostic {
  double estimate; // e^{pi sqrt(2n/3)} / (4 n sqrt(3))
  double ratio;    // estimate / P(n)
};

HardyRamanujanDiagnostic hardy_ramanujan_diagnostic(int n);

BigCount binomial(int n, int k);
BigCount factorial(int n);

} // namespace permcomm
