#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sedf/errors.hpp"

namespace sedf {

class finite_group;
using group_ptr = std::shared_ptr<const finite_group>;

// Immutable finite group stored as a full multiplication table.
// Element indices run 0..n-1 and index 0 is always the identity.
class finite_group {
public:
  static constexpr int default_assoc_bound = 64;

  // table is flattened row-major: table[i*n+j] = i*j. The constructor checks
  // the identity row/column, the Latin-square property, two-sided inverses,
  // and (for n <= assoc_bound) associativity over all triples.
  finite_group(std::vector<int> table, std::vector<std::string> labels,
               std::string name, int assoc_bound = default_assoc_bound);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[a * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // a * b^{-1}
  int rdiv(int a, int b) const { return mul(a, inv_[b]); }
  // b^{-1} * a
  int ldiv(int a, int b) const { return mul(inv_[b], a); }
  int element_order(int a) const;
  bool abelian() const { return abelian_; }

  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  // -1 when no element carries the label
  int index_of(const std::string& label) const;

  // structural equality: same order and identical multiplication table
  bool same_table(const finite_group& o) const;

  // sorted multiset of element orders; cheap isomorphism invariant
  std::vector<int> order_profile() const;

private:
  int n_;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> labels_;
  std::string name_;
  bool abelian_;
};

group_ptr construct_cyclic(int n);
group_ptr construct_direct_product(const group_ptr& a, const group_ptr& b);
// order = group order (even); elements e, r, .., r^{h-1}, s, sr, .., sr^{h-1}
// with h = order/2, s^2 = e, r^h = e and the rewrite r*s = s*r^{-1}
group_ptr construct_dihedral(int order);
// Z_p x| Z_q on pairs (x,y), (x1,y1)(x2,y2) = (x1 + action^{y1} x2, y1 + y2);
// requires q | p-1 and action of multiplicative order exactly q mod p
group_ptr construct_semidirect(int p, int q, int action);
// text format: line 1 holds n, then n*n whitespace-separated indices,
// then optionally n whitespace-separated labels
group_ptr parse_cayley_table(std::istream& in, const std::string& name = "file:<stream>");

// Bijective relabeling between two groups that preserves multiplication.
struct group_map {
  group_ptr source;
  group_ptr target;
  std::vector<int> image;

  int operator()(int i) const { return image[i]; }
};

group_map identity_map(const group_ptr& g);
// h(x) = f(g(x)); requires g.target and f.source to share a table
group_map compose(const group_map& f, const group_map& g);
group_map inverse_map(const group_map& m);
// true iff image is a bijection fixing 0 that commutes with multiplication
bool is_valid_map(const group_map& m);

// Complete automorphism group, sorted lexicographically by image array.
// Enumeration backtracks over images of a greedily chosen generating set;
// candidate images must have matching element order.
std::vector<group_map> automorphisms(const group_ptr& g);
std::optional<group_map> find_isomorphism(const group_ptr& a, const group_ptr& b);

} // namespace sedf
