#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sedf/classify.hpp"
#include "sedf/params.hpp"

namespace sedf {

// outcome of search + classification for one (parameter set, group) pair
struct classified_cell {
  param_set params;
  group_ptr group;
  std::vector<family_class> classes;
  // per class: ids of constructions whose output is equivalent to it
  std::vector<std::vector<std::string>> case_tags;
  std::uint64_t search_nodes = 0;
};

// every (admissible nontrivial params, abelian group) cell with n <= max_order
std::vector<classified_cell> abelian_result_cells(int max_order, int jobs = 1);

// the nonabelian rows: dihedral order 10 at (10,2,3,1) and the order-21
// Frobenius group at (21,2,10,5) and (21,6,2,1)
std::vector<classified_cell> nonabelian_result_cells(int jobs = 1);

// construction ids ("pa-st", "paley", "cyclotomic", "even-k", "dihedral")
// whose output for these parameters is equivalent to fam
std::vector<std::string> matching_constructions(const block_family& fam, const param_set& p);

} // namespace sedf
