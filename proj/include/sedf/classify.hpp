#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sedf/family.hpp"
#include "sedf/group.hpp"

namespace sedf {

// maps family x onto family y: block i of x lands on block block_perm[i]
// of y after applying alpha and multiplying by left/right on those sides
struct equivalence_witness {
  group_map alpha;
  int left = 0;
  int right = 0;
  std::vector<int> block_perm;
};

// families are equivalent when some automorphism (or isomorphism, for
// distinct groups) plus two-sided translation carries one onto the other;
// block order is ignored unless allow_block_permutation is false
std::optional<equivalence_witness> equivalent(const block_family& x,
                                              const block_family& y,
                                              bool allow_block_permutation = true);

// lexicographically least transformed block list; equal keys characterize
// equivalence within one group
struct canonical_form {
  std::vector<std::vector<int>> key;

  friend bool operator==(const canonical_form&, const canonical_form&) = default;
  friend auto operator<=>(const canonical_form&, const canonical_form&) = default;
};

canonical_form canonical_form_of(const block_family& fam);

struct family_class {
  block_family representative; // the canonical-form member of the orbit
  std::vector<std::size_t> members; // indices into the classified input
};

// partition same-group families into equivalence classes, sorted by
// representative block lists
std::vector<family_class> classify_families(const std::vector<block_family>& fams);

} // namespace sedf
