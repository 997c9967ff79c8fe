#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sedf/family.hpp"
#include "sedf/group.hpp"

namespace sedf {

struct search_options {
  bool first_only = false;
  int jobs = 1;
  // re-derive every partial check by full recount (the reference semantics)
  // instead of consulting the incremental counters
  bool naive_check = false;
  // record a hash of every visited node, in visit order (serial runs only)
  bool log_nodes = false;
  // parallel runs split the tree below nodes with this many placed elements
  int split_placed = 3;
  // orders above 64 need an explicit opt-in
  bool allow_large = false;
};

struct search_stats {
  std::uint64_t nodes = 0;
  std::uint64_t families = 0;
};

struct search_result {
  std::vector<block_family> families; // sorted by block lists
  search_stats stats;
  std::vector<std::uint64_t> node_log;
};

// all (n,m,k,lambda)-SEDFs over g that contain the identity in the first
// block, blocks in increasing-minimum order
search_result search_all(group_ptr g, int m, int k, int lambda,
                         const search_options& opts = {});

std::optional<block_family> search_first(group_ptr g, int m, int k, int lambda,
                                         const search_options& opts = {});

} // namespace sedf
