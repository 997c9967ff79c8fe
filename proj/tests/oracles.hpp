#pragma once

// Slow reference implementations used to cross-check the library. Everything
// here is coded straight from definitions and shares no logic with src/, so
// agreement between the two is meaningful evidence.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "sedf/group.hpp"

namespace oracle {

using blocks_t = std::vector<std::vector<int>>;

// tally of x * y^{-1} (or y^{-1} * x when mirrored) over x in blocks[i],
// y in any other block
inline std::map<int, int> external_tally(const sedf::finite_group& g, const blocks_t& blocks,
                                         std::size_t i, bool mirrored = false) {
  std::map<int, int> tally;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    if (j == i) continue;
    for (int x : blocks[i])
      for (int y : blocks[j])
        ++tally[mirrored ? g.mul(g.inv(y), x) : g.mul(x, g.inv(y))];
  }
  return tally;
}

inline bool is_sedf(const sedf::finite_group& g, const blocks_t& blocks, int lambda,
                    bool mirrored = false) {
  if (blocks.size() < 2) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto tally = external_tally(g, blocks, i, mirrored);
    if (tally.count(0)) return false;
    if (static_cast<int>(tally.size()) != g.order() - 1) return false;
    for (auto [d, c] : tally)
      if (c != lambda) return false;
  }
  return true;
}

inline bool is_edf(const sedf::finite_group& g, const blocks_t& blocks, int lambda) {
  if (blocks.size() < 2) return false;
  std::map<int, int> tally;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (auto [d, c] : external_tally(g, blocks, i)) tally[d] += c;
  if (tally.count(0)) return false;
  if (static_cast<int>(tally.size()) != g.order() - 1) return false;
  for (auto [d, c] : tally)
    if (c != lambda) return false;
  return true;
}

inline bool is_gsedf(const sedf::finite_group& g, const blocks_t& blocks,
                     const std::vector<int>& lambdas) {
  if (blocks.size() < 2 || lambdas.size() != blocks.size()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto tally = external_tally(g, blocks, i);
    if (tally.count(0)) return false;
    if (static_cast<int>(tally.size()) != g.order() - 1) return false;
    for (auto [d, c] : tally)
      if (c != lambdas[i]) return false;
  }
  return true;
}

namespace detail {

inline void pick_combinations(const std::vector<int>& pool, std::size_t from, int need,
                              std::vector<int>& cur,
                              const std::function<void(const std::vector<int>&)>& fn) {
  if (need == 0) {
    fn(cur);
    return;
  }
  for (std::size_t i = from; i + need <= pool.size() + 0u && i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    pick_combinations(pool, i + 1, need - 1, cur, fn);
    cur.pop_back();
  }
}

inline void extend_family(int n, int m, int k, std::vector<char>& used, int prev_min,
                          blocks_t& fam, std::vector<blocks_t>& out) {
  if (static_cast<int>(fam.size()) == m) {
    out.push_back(fam);
    return;
  }
  // next block's minimum: any unused element above the previous minimum
  for (int mn = prev_min + 1; mn < n; ++mn) {
    if (used[mn]) continue;
    std::vector<int> pool;
    for (int x = mn + 1; x < n; ++x)
      if (!used[x]) pool.push_back(x);
    std::vector<int> cur{mn};
    used[mn] = 1;
    pick_combinations(pool, 0, k - 1, cur, [&](const std::vector<int>& block) {
      for (std::size_t i = 1; i < block.size(); ++i) used[block[i]] = 1;
      fam.push_back(block);
      extend_family(n, m, k, used, mn, fam, out);
      fam.pop_back();
      for (std::size_t i = 1; i < block.size(); ++i) used[block[i]] = 0;
    });
    used[mn] = 0;
  }
}

} // namespace detail

// every family of m pairwise disjoint k-subsets of {0..n-1} whose first block
// contains 0, blocks listed in increasing-minimum order
inline std::vector<blocks_t> all_identity_families(int n, int m, int k) {
  std::vector<blocks_t> out;
  std::vector<char> used(n, 0);
  used[0] = 1;
  std::vector<int> pool;
  for (int x = 1; x < n; ++x) pool.push_back(x);
  std::vector<int> first{0};
  blocks_t fam;
  detail::pick_combinations(pool, 0, k - 1, first, [&](const std::vector<int>& block) {
    for (std::size_t i = 1; i < block.size(); ++i) used[block[i]] = 1;
    fam.push_back(block);
    detail::extend_family(n, m, k, used, 0, fam, out);
    fam.pop_back();
    for (std::size_t i = 1; i < block.size(); ++i) used[block[i]] = 0;
  });
  return out;
}

inline std::vector<blocks_t> brute_force_sedfs(const sedf::finite_group& g, int m, int k,
                                               int lambda) {
  std::vector<blocks_t> hits;
  for (const auto& fam : all_identity_families(g.order(), m, k))
    if (is_sedf(g, fam, lambda)) hits.push_back(fam);
  std::sort(hits.begin(), hits.end());
  return hits;
}

// |Aut(G)| by checking every permutation that fixes the identity; only
// sensible for n <= 10 or so
inline long long brute_force_automorphism_count(const sedf::finite_group& g) {
  int n = g.order();
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  long long count = 0;
  std::vector<int> img(n);
  img[0] = 0;
  do {
    for (int i = 1; i < n; ++i) img[i] = rest[i - 1];
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n; ++b)
        if (img[g.mul(a, b)] != g.mul(img[a], img[b])) {
          ok = false;
          break;
        }
    if (ok) ++count;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return count;
}

inline long long euler_phi(int n) {
  long long r = n;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  if (n > 1) r -= r / n;
  return r;
}

// lexicographically least sorted block list over all affine images
// x -> c*x + t of Z_n (gcd(c,n) = 1); the canonical form for cyclic groups,
// derived from the fact that Aut(Z_n) is exactly multiplication by units
inline blocks_t min_affine_form(int n, const blocks_t& blocks) {
  blocks_t best;
  for (int c = 1; c < n; ++c) {
    if (std::gcd(c, n) != 1) continue;
    for (int t = 0; t < n; ++t) {
      blocks_t img;
      for (const auto& b : blocks) {
        std::vector<int> nb;
        for (int x : b) nb.push_back((c * x + t) % n);
        std::sort(nb.begin(), nb.end());
        img.push_back(std::move(nb));
      }
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = std::move(img);
    }
  }
  return best;
}

} // namespace oracle
