#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sedf/errors.hpp"
#include "sedf/group.hpp"

namespace sedf {

// m disjoint blocks of element indices; blocks kept sorted ascending.
// Block order is preserved as given (equivalence testing treats it as
// unordered).
struct block_family {
  group_ptr group;
  std::vector<std::vector<int>> blocks;
};

struct gsedf_profile {
  std::vector<int> sizes;
  std::vector<int> lambdas;
};

// Per-difference tally with an undo journal so a search can retract the
// increments of an abandoned branch without a full recount.
class difference_counter {
public:
  explicit difference_counter(int n) : counts_(n, 0) {}

  void add(int d) {
    ++counts_[d];
    journal_.push_back(d);
  }
  int count(int d) const { return counts_[d]; }
  int total() const { return static_cast<int>(journal_.size()); }
  std::size_t mark() const { return journal_.size(); }
  void rollback(std::size_t mark) {
    while (journal_.size() > mark) {
      --counts_[journal_.back()];
      journal_.pop_back();
    }
  }
  const std::vector<int>& counts() const { return counts_; }

private:
  std::vector<int> counts_;
  std::vector<int> journal_;
};

// Sorts each block and validates: indices in range, no repeats, pairwise
// disjoint blocks.
block_family make_family(group_ptr g, std::vector<std::vector<int>> blocks);
void validate_family(const block_family& fam);

// counts[d] = #{(x,y) in a x b : x y^-1 = d}; requires disjoint nonempty sets
difference_counter difference_multiset(const std::vector<int>& a,
                                       const std::vector<int>& b,
                                       const finite_group& g);

bool verify_edf(const block_family& fam, int lambda);
bool verify_sedf(const block_family& fam, int lambda);
bool verify_gsedf(const block_family& fam, const gsedf_profile& profile);
// same as verify_sedf with differences y^-1 x instead of x y^-1
bool verify_cosedf(const block_family& fam, int lambda);

block_family invert_family(const block_family& fam);

enum class translate_side { left, right };
block_family translate_family(const block_family& fam, int g, translate_side side);

// image family under a group map; phi must start at fam.group
block_family map_family(const block_family& fam, const group_map& phi);

// partial difference set: internal differences of d hit members of d lam
// times and non-identity outsiders mu times
bool verify_pds(const std::vector<int>& d, const finite_group& g, int k, int lam, int mu);

} // namespace sedf
