#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sedf/family.hpp"
#include "sedf/group.hpp"

namespace sedf {

// multipliers and base block sizes for the two-block recursion
struct recursion_spec {
  int a = 1;
  int b = 1;
  int s = 1;
  int t = 1;
};

// every constructor verifies its output before returning it

// n singleton blocks: the (n,n,1,1) family
block_family construct_trivial(group_ptr g);

// ({0..k-1}, {k,2k,...,k^2}) in Z_{k^2+1}, lambda = 1
block_family construct_pa_st(int k);

// nonzero squares vs non-squares in the additive group of GF(q), q = 1 mod 4
block_family construct_paley(int q);

// all verified pairs of distinct index-e cyclotomic classes of GF(q);
// e = 4 needs q = 16t^2+1 (prime power), e = 6 needs q = 108t^2+1 prime
std::vector<block_family> construct_cyclotomic(int q, int e);

// ({0..a-1} u {2a..3a-1}, U_i {(4i-1)a, 4ia}) in Z_{4a^2+1}: k = 2a, lambda = 1
block_family construct_even_k(int a);

// blow a (k^2+1,2,k,1) base up to ((ak)^2+1,2,ak,1); the base must have
// every first-block representative below every second-block one
block_family recursive_lambda1(const block_family& base, int a);

// first equivalent form (translate + automorphism + block swap) of a
// two-block cyclic-group family with max(B_1) < min(B_2), if any
std::optional<block_family> normalize_below(const block_family& fam);

// (st+1,2;s,t;1,1)-GSEDF base -> (abst+1,2;as,bt;1,1)-GSEDF
block_family recursive_gsedf(const block_family& base, const recursion_spec& spec);

// two non-equivalent ((ra)^2+1,2,ra,1) families from one k = r*a split
std::pair<block_family, block_family> composite_pair(int r, int a);

// rotation/reflection blocks in the dihedral group of order k^2+1, k odd
block_family construct_dihedral_sedf(int k);

} // namespace sedf
