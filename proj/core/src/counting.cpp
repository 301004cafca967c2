#include "permcomm/counting.hpp"

#include <cmath>

#include "permcomm/errors.hpp"

namespace permcomm {

PartitionTable::PartitionTable(int max_n) {
  if (max_n < 0)
    throw PreconditionViolated("partition table bound must be >= 0");
  p_.assign(max_n + 1, 0);
  p_[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    BigCount acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n)
        break;
      const BigCount term =
          p_[n - g1] + (g2 <= n ? p_[n - g2] : BigCount(0));
      if (k % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    p_[n] = acc;
  }

  // Distinct-part knapsacks over odd summands (descending inner loop keeps
  // every part used at most once).
  const auto distinct_odd = [max_n](int first_part) {
    std::vector<BigCount> dp(max_n + 1, 0);
    dp[0] = 1;
    for (int part = first_part; part <= max_n; part += 2)
      for (int n = max_n; n >= part; --n)
        dp[n] += dp[n - part];
    return dp;
  };
  q_ = distinct_odd(1);
  r_ = distinct_odd(3);
}

const BigCount &PartitionTable::P(int n) const {
  if (n < 0 || n > max_n())
    throw PreconditionViolated("P(n) outside table range");
  return p_[n];
}

const BigCount &PartitionTable::Q(int n) const {
  if (n < 0 || n > max_n())
    throw PreconditionViolated("Q(n) outside table range");
  return q_[n];
}

const BigCount &PartitionTable::R(int n) const {
  if (n < 0 || n > max_n())
    throw PreconditionViolated("R(n) outside table range");
  return r_[n];
}

BigCount partition_p(int n) {
  if (n < 0)
    throw PreconditionViolated("partition_p requires n >= 0");
  return PartitionTable(n).P(n);
}

BigCount partition_distinct_odd(int n, int min_part) {
  if (n < 0)
    throw PreconditionViolated("partition_distinct_odd requires n >= 0");
  if (min_part < 1 || min_part % 2 == 0)
    throw InvalidMinPart("min_part must be odd and >= 1, got " +
                         std::to_string(min_part));
  std::vector<BigCount> dp(n + 1, 0);
  dp[0] = 1;
  for (int part = min_part; part <= n; part += 2)
    for (int m = n; m >= part; --m)
      dp[m] += dp[m - part];
  return dp[n];
}

BigCount class_count_alternating(int n) {
  if (n < 2)
    throw PreconditionViolated("class_count_alternating requires n >= 2");
  const PartitionTable t(n);
  const BigCount sum = t.P(n) + 3 * t.Q(n);
  if (sum % 2 != 0)
    throw ParityContradiction("P(n) + 3Q(n) is odd at n=" +
                              std::to_string(n));
  return sum / 2;
}

DerangementCounts derangement_counts(int n) {
  if (n < 0)
    throw PreconditionViolated("derangement_counts requires n >= 0");
  if (n == 0)
    return {1, 1, 0};
  BigCount a = 1; // a_0
  for (int m = 1; m <= n; ++m) {
    a *= m;
    if (m % 2 == 0)
      a += 1;
    else
      a -= 1;
  }
  // b - c = (-1)^{n-1} (n-1), b + c = a.
  const BigCount diff =
      (n % 2 == 1) ? BigCount(n - 1) : BigCount(-(n - 1));
  const BigCount twice_b = a + diff;
  if (twice_b % 2 != 0)
    throw ParityContradiction("derangement split is not integral at n=" +
                              std::to_string(n));
  DerangementCounts out;
  out.a = a;
  out.b = twice_b / 2;
  out.c = a - out.b;
  return out;
}

BigCount even_fixing_at_most(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw PreconditionViolated("even_fixing_at_most requires 0 <= k <= n");
  BigCount total = 0;
  for (int i = 0; i <= k; ++i)
    total += binomial(n, i) * derangement_counts(n - i).b;
  return total;
}

BigCount t2_lower_bound(int n, const BigRational &r) {
  if (n < 1)
    throw PreconditionViolated("t2_lower_bound requires n >= 1");
  if (r <= 4)
    throw InvalidRatio("ratio must exceed 4");
  const BigCount m =
      (BigCount(n) * denominator(r)) / numerator(r); // floor(n/r)
  const int mi = m.convert_to<int>();
  if (mi == 0)
    return 0;
  const PartitionTable t(n);
  return (t.P(n) - t.P(n - mi)) / 2;
}

BigRational parse_ratio(const std::string &text) {
  const auto digits_only = [](const std::string &s) {
    if (s.empty())
      return false;
    for (char ch : s)
      if (ch < '0' || ch > '9')
        return false;
    return true;
  };
  try {
    const size_t slash = text.find('/');
    if (slash != std::string::npos) {
      const std::string num = text.substr(0, slash);
      const std::string den = text.substr(slash + 1);
      if (!digits_only(num) || !digits_only(den) || BigCount(den) == 0)
        throw InvalidRatio("cannot parse ratio '" + text + "'");
      return BigRational(BigCount(num), BigCount(den));
    }
    const size_t dot = text.find('.');
    if (dot != std::string::npos) {
      const std::string whole = text.substr(0, dot);
      const std::string frac = text.substr(dot + 1);
      if (!digits_only(whole) || !digits_only(frac))
        throw InvalidRatio("cannot parse ratio '" + text + "'");
      BigCount den = 1;
      for (size_t i = 0; i < frac.size(); ++i)
        den *= 10;
      return BigRational(BigCount(whole) * den + BigCount(frac), den);
    }
    if (!digits_only(text))
      throw InvalidRatio("cannot parse ratio '" + text + "'");
    return BigRational(BigCount(text));
  } catch (const InvalidRatio &) {
    throw;
  } catch (const std::exception &) {
    throw InvalidRatio("cannot parse ratio '" + text + "'");
  }
}

BigRational generation_probability_bound(int n) {
  if (n < 33)
    throw OutOfStatedRange("bound is stated for n >= 33");
  const BigCount f = factorial(n / 10);
  return BigRational(f - 2, f);
}

HardyRamanujanDiagnostic hardy_ramanujan_diagnostic(int n) {
  if (n < 1)
    throw PreconditionViolated("hardy_ramanujan_diagnostic requires n >= 1");
  const double pi = 3.14159265358979323846;
  const double estimate =
      std::exp(pi * std::sqrt(2.0 * n / 3.0)) / (4.0 * n * std::sqrt(3.0));
  const double exact = partition_p(n).convert_to<double>();
  return {estimate, estimate / exact};
}

BigCount binomial(int n, int k) {
  if (n < 0 || k < 0)
    throw PreconditionViolated("binomial requires n, k >= 0");
  if (k > n)
    return 0;
  if (k > n - k)
    k = n - k;
  BigCount result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigCount factorial(int n) {
  if (n < 0)
    throw PreconditionViolated("factorial requires n >= 0");
  BigCount f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace permcomm
