#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "permcomm/counting.hpp"
#include "permcomm/errors.hpp"

using namespace permcomm;

TEST_CASE("partition numbers") {
  CHECK(partition_p(0) == 1);
  CHECK(partition_p(1) == 1);
  CHECK(partition_p(5) == 7);
  CHECK(partition_p(10) == 42);
  CHECK(partition_p(100) == BigCount("190569292"));
  CHECK_THROWS_AS(partition_p(-1), PreconditionViolated);
}

TEST_CASE("pentagonal recurrence matches the DP oracle") {
  PartitionTable table(200);
  for (int n = 0; n <= 200; ++n)
    CHECK(table.P(n) == oracle::partitions_dp(n));
}

TEST_CASE("distinct odd partitions") {
  CHECK(partition_distinct_odd(5, 1) == 1);
  CHECK(partition_distinct_odd(1, 1) == 1);
  CHECK(partition_distinct_odd(0, 1) == 1);
  CHECK(partition_distinct_odd(4, 3) == 0);
  CHECK(partition_distinct_odd(3, 3) == 1);
  CHECK_THROWS_AS(partition_distinct_odd(5, 2), InvalidMinPart);

  for (int n = 0; n <= 60; ++n) {
    CHECK(partition_distinct_odd(n, 1) == oracle::distinct_odd_brute(n, 1));
    CHECK(partition_distinct_odd(n, 3) == oracle::distinct_odd_brute(n, 3));
    CHECK(partition_distinct_odd(n, 5) == oracle::distinct_odd_brute(n, 5));
  }
}

TEST_CASE("Q is non-decreasing and couples to R") {
  PartitionTable table(500);
  for (int n = 3; n <= 500; ++n) {
    CHECK(table.Q(n) >= table.Q(n - 1));
    CHECK(table.Q(n) - table.Q(n - 1) == table.R(n) - table.R(n - 2));
  }
}

TEST_CASE("alternating class counts") {
  CHECK(class_count_alternating(5) == 5);
  CHECK(class_count_alternating(7) == 9);
  CHECK(class_count_alternating(9) == 18);
  for (int n = 2; n <= 30; ++n)
    CHECK(class_count_alternating(n) == oracle::alternating_classes_by_types(n));
  for (int n = 2; n <= 6; ++n)
    CHECK(class_count_alternating(n) == oracle::alternating_classes_by_group(n));
}

TEST_CASE("derangement counts") {
  const DerangementCounts d4 = derangement_counts(4);
  CHECK(d4.a == 9);
  CHECK(d4.b == 3);
  CHECK(d4.c == 6);
  const DerangementCounts d5 = derangement_counts(5);
  CHECK(d5.a == 44);
  CHECK(d5.b == 24);
  CHECK(d5.c == 20);
  const DerangementCounts d0 = derangement_counts(0);
  CHECK(d0.a == 1);
  CHECK(d0.b == 1);
  CHECK(d0.c == 0);
  const DerangementCounts d1 = derangement_counts(1);
  CHECK(d1.a == 0);
  CHECK(d1.b == 0);
  CHECK(d1.c == 0);
}

TEST_CASE("derangements match brute force") {
  for (int n = 0; n <= 7; ++n) {
    const DerangementCounts d = derangement_counts(n);
    const oracle::DerangementCounts b = oracle::derangements_brute(n);
    CHECK(d.a == b.total);
    CHECK(d.b == b.even);
    CHECK(d.c == b.odd);
  }
}

TEST_CASE("derangement identities") {
  BigCount prev = 1; // a_0
  for (int n = 1; n <= 60; ++n) {
    const DerangementCounts d = derangement_counts(n);
    const BigCount sign = (n % 2 == 0) ? 1 : -1;
    CHECK(d.a == BigCount(n) * prev + sign);
    CHECK(d.b - d.c == -sign * (n - 1));
    CHECK(d.b + d.c == d.a);
    prev = d.a;
  }
}

TEST_CASE("a_n is the integer nearest to n!/e") {
  // rational sandwich for e: S <= e <= S + 2/26! with S the partial sum
  BigRational lo = 0;
  BigCount fact = 1;
  for (int m = 0; m <= 25; ++m) {
    if (m > 0)
      fact *= m;
    lo += BigRational(BigCount(1), fact);
  }
  const BigRational hi = lo + BigRational(BigCount(2), fact * 26);
  for (int n = 1; n <= 20; ++n) {
    const BigCount a = derangement_counts(n).a;
    const BigRational nf(factorial(n));
    // a - 1/2 < n!/e < a + 1/2, using n!/hi <= n!/e <= n!/lo
    CHECK(nf / hi > BigRational(2 * a - 1, BigCount(2)));
    CHECK(nf / lo < BigRational(2 * a + 1, BigCount(2)));
  }
}

TEST_CASE("even permutations fixing at most k points") {
  CHECK(even_fixing_at_most(5, 0) == 24);
  CHECK(even_fixing_at_most(5, 5) == 60);
  CHECK(even_fixing_at_most(6, 1) == 274);
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(even_fixing_at_most(n, k) == oracle::even_fixing_brute(n, k));
  CHECK_THROWS_AS(even_fixing_at_most(5, 6), PreconditionViolated);
  CHECK_THROWS_AS(even_fixing_at_most(5, -1), PreconditionViolated);
}

TEST_CASE("T2 lower bound") {
  CHECK(t2_lower_bound(10, BigRational(5)) == 10);
  CHECK(t2_lower_bound(3, BigRational(5)) == 0);
  PartitionTable table(100);
  CHECK(t2_lower_bound(100, BigRational(5)) == (table.P(100) - table.P(80)) / 2);
  CHECK(t2_lower_bound(100, BigRational(9, 2)) == (table.P(100) - table.P(78)) / 2);
  CHECK_THROWS_AS(t2_lower_bound(10, BigRational(4)), InvalidRatio);
  CHECK_THROWS_AS(t2_lower_bound(10, BigRational(7, 2)), InvalidRatio);
}

TEST_CASE("ratio parsing") {
  CHECK(parse_ratio("5") == BigRational(5));
  CHECK(parse_ratio("9/2") == BigRational(9, 2));
  CHECK(parse_ratio("4.5") == BigRational(9, 2));
  CHECK(parse_ratio("4.25") == BigRational(17, 4));
  CHECK_THROWS_AS(parse_ratio(""), InvalidRatio);
  CHECK_THROWS_AS(parse_ratio("abc"), InvalidRatio);
  CHECK_THROWS_AS(parse_ratio("1/0"), InvalidRatio);
  CHECK_THROWS_AS(parse_ratio("-5"), InvalidRatio);
}

TEST_CASE("generation probability bound") {
  CHECK(generation_probability_bound(33) == BigRational(2, 3));
  CHECK(generation_probability_bound(100) ==
        BigRational(1) - BigRational(BigCount(2), factorial(10)));
  CHECK_THROWS_AS(generation_probability_bound(32), OutOfStatedRange);
  BigRational prev = generation_probability_bound(33);
  for (int n = 34; n <= 200; ++n) {
    const BigRational cur = generation_probability_bound(n);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("Hardy-Ramanujan diagnostic") {
  const HardyRamanujanDiagnostic d500 = hardy_ramanujan_diagnostic(500);
  const HardyRamanujanDiagnostic d5000 = hardy_ramanujan_diagnostic(5000);
  CHECK(d5000.ratio > 0.9);
  CHECK(d5000.ratio < 1.1);
  CHECK(std::abs(d5000.ratio - 1.0) < std::abs(d500.ratio - 1.0));
}

TEST_CASE("tail ratio P(n - floor(n/5)) / P(n) decreases toward zero") {
  double prev = 1.0;
  for (int n : {100, 400, 1600}) {
    PartitionTable table(n);
    const BigRational ratio(table.P(n - n / 5), table.P(n));
    const double value = ratio.convert_to<double>();
    CHECK(value < prev);
    prev = value;
  }
  CHECK(prev < 0.01);
}

TEST_CASE("binomials and factorials") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3'628'800);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == oracle::binomial_pascal(n, k));
}
