#pragma once

#include <string>
#include <vector>

#include "sedf/group.hpp"

namespace sedf {

// one group per isomorphism class of abelian groups of order n, cyclic
// first; built as direct products of ascending invariant factors, so names
// read like "Z2xZ12"
std::vector<group_ptr> abelian_groups_of_order(int n);

// the nonabelian groups covered by the result tables: the dihedral group of
// order 10 and the order-21 Frobenius group; empty elsewhere
std::vector<group_ptr> nonabelian_groups_of_order(int n);

// "Z12", "Z2xZ3", "D10", "SD(7,3,2)", or "file:<path>" (Cayley-table file)
group_ptr group_from_spec(const std::string& spec);

} // namespace sedf
