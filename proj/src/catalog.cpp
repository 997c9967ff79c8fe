#include "sedf/catalog.hpp"

#include <algorithm>
#include <fstream>

#include "sedf/errors.hpp"

namespace sedf {

namespace {

// partitions of e with parts descending, enumerated largest-first so the
// single-part partition (the cyclic factor) leads
void partitions_of(int e, int cap, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(e, cap); part >= 1; --part) {
    cur.push_back(part);
    partitions_of(e - part, part, cur, out);
    cur.pop_back();
  }
}

std::vector<std::pair<int, int>> factor_pairs(int n) {
  std::vector<std::pair<int, int>> fs;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fs.push_back({d, e});
    }
  if (n > 1) fs.push_back({n, 1});
  return fs;
}

group_ptr product_of_invariant_factors(const std::vector<int>& factors) {
  group_ptr g = construct_cyclic(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i)
    g = construct_direct_product(g, construct_cyclic(factors[i]));
  return g;
}

} // namespace

std::vector<group_ptr> abelian_groups_of_order(int n) {
  if (n < 1) throw parameter_error("order must be positive");
  if (n == 1) return {construct_cyclic(1)};
  auto primes = factor_pairs(n);
  std::vector<std::vector<std::vector<int>>> choices; // per prime: partitions of the exponent
  for (auto [p, e] : primes) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_of(e, e, cur, parts);
    choices.push_back(std::move(parts));
  }

  std::vector<group_ptr> out;
  std::vector<std::size_t> pick(primes.size(), 0);
  for (;;) {
    // align the descending prime-power parts to form invariant factors
    std::size_t rows = 0;
    for (std::size_t i = 0; i < primes.size(); ++i)
      rows = std::max(rows, choices[i][pick[i]].size());
    std::vector<int> factors(rows, 1);
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const auto& part = choices[i][pick[i]];
      for (std::size_t j = 0; j < part.size(); ++j) {
        int pw = 1;
        for (int t = 0; t < part[j]; ++t) pw *= primes[i].first;
        factors[j] *= pw;
      }
    }
    std::reverse(factors.begin(), factors.end()); // ascending, d_i | d_{i+1}
    out.push_back(product_of_invariant_factors(factors));

    std::size_t pos = primes.size();
    while (pos > 0) {
      --pos;
      if (++pick[pos] < choices[pos].size()) break;
      pick[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

std::vector<group_ptr> nonabelian_groups_of_order(int n) {
  if (n == 10) return {construct_dihedral(10)};
  if (n == 21) return {construct_semidirect(7, 3, 2)};
  return {};
}

group_ptr group_from_spec(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    std::string path = spec.substr(5);
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open Cayley-table file: " + path);
    return parse_cayley_table(in, spec);
  }
  auto number_after = [&](const std::string& s, std::size_t at) {
    if (at >= s.size()) throw parse_error("malformed group spec: " + spec);
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(s.substr(at), &used);
    } catch (const std::exception&) {
      throw parse_error("malformed group spec: " + spec);
    }
    if (at + used != s.size()) throw parse_error("malformed group spec: " + spec);
    return v;
  };
  if (spec.rfind("SD(", 0) == 0 && spec.back() == ')') {
    std::string inner = spec.substr(3, spec.size() - 4);
    int vals[3], count = 0;
    std::size_t start = 0;
    while (count < 3) {
      std::size_t comma = inner.find(',', start);
      std::string piece =
          comma == std::string::npos ? inner.substr(start) : inner.substr(start, comma - start);
      try {
        vals[count++] = std::stoi(piece);
      } catch (const std::exception&) {
        throw parse_error("malformed group spec: " + spec);
      }
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (count != 3) throw parse_error("semidirect spec needs (p,q,action)");
    return construct_semidirect(vals[0], vals[1], vals[2]);
  }
  if (spec.rfind("D", 0) == 0 && spec.find('x') == std::string::npos)
    return construct_dihedral(number_after(spec, 1));
  if (spec.rfind("Z", 0) == 0) {
    std::vector<int> orders;
    std::size_t start = 0;
    while (start < spec.size()) {
      std::size_t x = spec.find('x', start);
      std::string piece =
          x == std::string::npos ? spec.substr(start) : spec.substr(start, x - start);
      if (piece.size() < 2 || piece[0] != 'Z')
        throw parse_error("malformed group spec: " + spec);
      orders.push_back(number_after(piece, 1));
      if (x == std::string::npos) break;
      start = x + 1;
      if (start >= spec.size()) throw parse_error("malformed group spec: " + spec);
    }
    group_ptr g = construct_cyclic(orders.front());
    for (std::size_t i = 1; i < orders.size(); ++i)
      g = construct_direct_product(g, construct_cyclic(orders[i]));
    return g;
  }
  throw parse_error("unrecognized group spec: " + spec);
}

} // namespace sedf
