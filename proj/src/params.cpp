#include "sedf/params.hpp"

#include <numeric>

#include "sedf/errors.hpp"

namespace sedf {

namespace {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// prime factors with multiplicity, ascending
std::vector<long long> factor(long long v) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= v; ++d)
    while (v % d == 0) {
      fs.push_back(d);
      v /= d;
    }
  if (v > 1) fs.push_back(v);
  return fs;
}

bool is_prime_power(long long v) {
  if (v < 2) return false;
  auto fs = factor(v);
  for (auto f : fs)
    if (f != fs.front()) return false;
  return true;
}

} // namespace

bool is_admissible(int n, int m, int k, int lambda) {
  if (n < 1 || m < 1 || k < 1 || lambda < 1)
    throw parameter_error("parameters must be positive");
  return m >= 2 && n >= m * k &&
         static_cast<long long>(lambda) * (n - 1) ==
             static_cast<long long>(k) * k * (m - 1);
}

std::vector<param_set> enumerate_admissible(int max_n, bool include_trivial) {
  if (max_n < 2) throw parameter_error("maximum order must be at least 2");
  std::vector<param_set> out;
  for (int n = 2; n <= max_n; ++n)
    for (int m = 2; m <= n; ++m)
      for (int k = include_trivial ? 1 : 2; m * k <= n; ++k) {
        long long num = static_cast<long long>(k) * k * (m - 1);
        if (num % (n - 1) != 0) continue;
        long long lambda = num / (n - 1);
        if (lambda < 1) continue;
        out.push_back({n, m, k, static_cast<int>(lambda)});
      }
  return out;
}

bool square_free_rule(int n) {
  if (n < 2) throw parameter_error("order must be at least 2");
  int v = n - 1;
  for (int d = 2; d * d <= v; ++d)
    if (v % (d * d) == 0) return false;
  return true;
}

std::optional<param_set> squareful_witness(int n) {
  if (n <= 2) throw parameter_error("order must exceed 2");
  int v = n - 1, a = 1;
  for (int d = 2; d * d <= v; ++d)
    while (v % (d * d) == 0) {
      a *= d;
      v /= d * d;
    }
  if (a == 1) return std::nullopt;
  int b = (n - 1) / (a * a);
  param_set p{n, b + 1, a, 1};
  if (!is_admissible(p.n, p.m, p.k, p.lambda))
    throw error("witness parameters fail the admissibility identity");
  return p;
}

std::vector<filter_hit> nonexistence_filters(const param_set& p, group_class gc) {
  const int n = p.n, m = p.m, k = p.k, lam = p.lambda;
  std::vector<filter_hit> hits;
  auto add = [&](const char* id, group_class scope) {
    // a rule stated for a wider class also covers the narrower query class
    if (static_cast<int>(scope) <= static_cast<int>(gc)) hits.push_back({id, scope});
  };

  // order bound on lambda: k=1 forces lambda=1, k>1 forces lambda<k
  if ((k == 1 && lam != 1) || (k > 1 && lam >= k)) add("lambda-ge-k", group_class::any);
  if (k > 1 && std::gcd(k, n - 1) == 1) add("gcd-k-n1", group_class::any);

  if (k > 1) {
    if (m == 3 || m == 4) add("m-in-3-4", group_class::abelian);
    if (m > 2 && is_prime(n)) add("prime-order", group_class::abelian);
    if (m > 2) {
      auto fs = factor(n);
      if (fs.size() == 2 && fs[0] != fs[1]) add("two-prime-product", group_class::abelian);
      bool cube_exception =
          fs.size() == 3 && fs[0] == fs[1] && fs[1] == fs[2] && fs[0] > 3'000'000'000'000LL;
      if (fs.size() <= 3 && !cube_exception) add("three-prime-product", group_class::abelian);
    }
    if (m > 2 && lam == 2) add("lambda-2", group_class::abelian);
    if (m > 2 && lam > 1) {
      long long lhs = static_cast<long long>(lam) * (k - 1) * (m - 2);
      long long rhs = static_cast<long long>(lam - 1) * k * (m - 1);
      if (lhs > rhs) add("ratio-bound", group_class::abelian);
    }
    if (m > 2) {
      bool found = false;
      for (long long q : factor(n))
        if (std::gcd(static_cast<long long>(k) * m, q) == 1 && m % q != 2 % q) found = true;
      if (found) add("coprime-prime-divisor", group_class::abelian);
    }
    if (m > 2 && is_prime_power(n)) add("prime-power-order", group_class::cyclic);
  }

  // lambda=1 exists (abelian) only as the two-block k^2+1 family or trivially
  bool lambda1_ok = (m == 2 && n == k * k + 1) || (k == 1 && m == n);
  if (lam == 1 && !lambda1_ok) add("lambda1-two-blocks", group_class::abelian);

  return hits;
}

} // namespace sedf
