#pragma once

#include <optional>
#include <string>
#include <vector>

namespace sedf {

struct param_set {
  int n = 0;
  int m = 0;
  int k = 0;
  int lambda = 0;

  friend bool operator==(const param_set&, const param_set&) = default;
  friend auto operator<=>(const param_set&, const param_set&) = default;
};

// m >= 2, n >= m*k, lambda*(n-1) = k^2*(m-1)
bool is_admissible(int n, int m, int k, int lambda);

// all admissible sets with 2 <= n <= max_n, sorted by (n,m,k); k = 1 (the
// (n,n,1,1) family) only when include_trivial is set
std::vector<param_set> enumerate_admissible(int max_n, bool include_trivial = false);

// true iff n-1 is square-free, in which case only trivial families exist
bool square_free_rule(int n);

// for n-1 = a^2*b with a maximal and a > 1: the admissible set (n, b+1, a, 1)
std::optional<param_set> squareful_witness(int n);

// widest class of groups a statement covers: any > abelian > cyclic
enum class group_class { any, abelian, cyclic };

struct filter_hit {
  std::string id;
  group_class scope;

  friend bool operator==(const filter_hit&, const filter_hit&) = default;
};

// every nonexistence rule that rules p out for groups of the given class;
// a rule scoped "abelian" applies to abelian and cyclic queries, "cyclic"
// only to cyclic ones
std::vector<filter_hit> nonexistence_filters(const param_set& p, group_class gc);

} // namespace sedf
