#pragma once

#include <string>
#include <vector>

#include "sedf/errors.hpp"
#include "sedf/group.hpp"

namespace sedf {

// GF(p^e) in polynomial basis. Elements are ints 0..q-1; the base-p digits of
// an element, least significant first, are its polynomial coefficients with
// the constant term first.
class finite_field {
public:
  finite_field(int p, int e); // use construct_field

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // coefficient list, constant term first, length e+1, monic
  const std::vector<int>& modulus() const { return modulus_; }
  // smallest primitive element by index
  int generator() const { return generator_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int pow(int a, long long k) const;
  int inverse(int a) const;
  int mul_order(int a) const;

  // base-p digits, constant term first, length e
  std::vector<int> coeffs(int a) const;
  // "(c_{e-1},..,c1,c0)" for e > 1, plain integer for e = 1
  std::string label(int a) const;

private:
  int p_, e_, q_;
  std::vector<int> modulus_;
  int generator_;
};

// Field with the lexicographically smallest monic irreducible modulus,
// ordered by coefficient tuple (c0, c1, .., c_{e-1}).
finite_field construct_field(int p, int e);

// The additive group as a finite_group; labels follow finite_field::label,
// so for e=1 this equals construct_cyclic(p) and for e=2 the labels are
// "(x-coefficient, constant term)" pairs.
group_ptr additive_group(const finite_field& f);

// Partition of the nonzero elements into squares and non-squares (q odd).
std::pair<std::vector<int>, std::vector<int>> squares_nonsquares(const finite_field& f);

struct cyclotomic_classes {
  int index_e;   // number of classes
  int generator; // primitive element the classes are built from
  std::vector<std::vector<int>> classes; // classes[i] = { g^{e j + i} }, sorted
};

// Index-e classes of the multiplicative group; requires e | q-1.
cyclotomic_classes compute_cyclotomic_classes(const finite_field& f, int e);

} // namespace sedf
