#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "sedf/field.hpp"

using namespace sedf;

TEST_CASE("prime fields are residue arithmetic") {
  auto f = construct_field(17, 1);
  CHECK(f.p() == 17);
  CHECK(f.e() == 1);
  CHECK(f.q() == 17);
  CHECK(f.modulus() == std::vector<int>{0, 1}); // the monic linear x
  CHECK(f.generator() == 3);                    // smallest primitive root mod 17
  CHECK(f.label(5) == "5");
  CHECK(f.coeffs(5) == std::vector<int>{5});
  for (int a = 0; a < 17; ++a)
    for (int b = 0; b < 17; ++b) {
      CHECK(f.add(a, b) == (a + b) % 17);
      CHECK(f.mul(a, b) == a * b % 17);
    }
  CHECK(f.pow(3, 16) == 1);
  CHECK(f.mul_order(3) == 16);
}

TEST_CASE("extension moduli are the lexicographically least irreducibles") {
  CHECK(construct_field(3, 2).modulus() == std::vector<int>{1, 0, 1});    // x^2 + 1
  CHECK(construct_field(2, 3).modulus() == std::vector<int>{1, 0, 1, 1}); // x^3 + x^2 + 1
  CHECK(construct_field(5, 2).modulus() == std::vector<int>{1, 1, 1});    // x^2 + x + 1
  CHECK(construct_field(2, 2).modulus() == std::vector<int>{1, 1, 1});
}

TEST_CASE("GF(9) fixes its published generator and labels") {
  auto f = construct_field(3, 2);
  CHECK(f.q() == 9);
  CHECK(f.generator() == 4); // x + 1
  CHECK(f.label(4) == "(1,1)");
  CHECK(f.label(3) == "(1,0)");
  CHECK(f.label(2) == "(0,2)");
  CHECK(f.coeffs(7) == std::vector<int>{1, 2}); // constant term first
  CHECK(f.mul_order(4) == 8);
}

TEST_CASE("field axioms hold elementwise") {
  for (auto f : {construct_field(3, 2), construct_field(2, 3)}) {
    int q = f.q();
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.mul(a, 1) == a);
      if (a) CHECK(f.mul(a, f.inverse(a)) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
        for (int c = 0; c < q; ++c) {
          CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // generator powers sweep every nonzero element
    std::set<int> seen;
    for (int e = 0; e < q - 1; ++e) seen.insert(f.pow(f.generator(), e));
    CHECK(static_cast<int>(seen.size()) == q - 1);
    // Frobenius x -> x^p respects both operations
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        CHECK(f.pow(f.add(a, b), f.p()) == f.add(f.pow(a, f.p()), f.pow(b, f.p())));
        CHECK(f.pow(f.mul(a, b), f.p()) == f.mul(f.pow(a, f.p()), f.pow(b, f.p())));
      }
  }
}

TEST_CASE("construction guards reject non-fields and oversized orders") {
  CHECK_THROWS_AS(construct_field(6, 1), parameter_error);
  CHECK_THROWS_AS(construct_field(4, 1), parameter_error);
  CHECK_THROWS_AS(construct_field(2, 0), parameter_error);
  CHECK_THROWS_AS(construct_field(2, 21), parameter_error);  // 2^21 > 2^20
  CHECK_THROWS_AS(construct_field(11, 6), parameter_error);  // 11^6 > 2^20
}

TEST_CASE("additive groups reuse field labels") {
  auto f9 = construct_field(3, 2);
  auto add9 = additive_group(f9);
  CHECK(add9->name() == "Z3xZ3");
  CHECK(add9->abelian());
  auto prod = construct_direct_product(construct_cyclic(3), construct_cyclic(3));
  CHECK(add9->same_table(*prod));
  CHECK(add9->labels() == prod->labels());

  auto f5 = construct_field(5, 1);
  auto add5 = additive_group(f5);
  CHECK(add5->name() == "Z5");
  CHECK(add5->same_table(*construct_cyclic(5)));

  CHECK(additive_group(construct_field(5, 2))->name() == "Z5xZ5");
  CHECK_THROWS_AS(additive_group(construct_field(3, 8)), parameter_error); // 6561 > 2048
}

TEST_CASE("square partitions match direct squaring") {
  auto f9 = construct_field(3, 2);
  auto [sq9, nsq9] = squares_nonsquares(f9);
  CHECK(sq9 == std::vector<int>{1, 2, 3, 6});
  CHECK(nsq9 == std::vector<int>{4, 5, 7, 8});

  for (auto f : {construct_field(13, 1), construct_field(17, 1), construct_field(5, 2)}) {
    auto [sq, nsq] = squares_nonsquares(f);
    CHECK(static_cast<int>(sq.size()) == (f.q() - 1) / 2);
    CHECK(static_cast<int>(nsq.size()) == (f.q() - 1) / 2);
    std::set<int> direct;
    for (int a = 1; a < f.q(); ++a) direct.insert(f.mul(a, a));
    CHECK(std::set<int>(sq.begin(), sq.end()) == direct);
    // a non-square times a non-square lands in the squares
    CHECK(direct.count(f.mul(nsq[0], nsq[1])) == 1);
  }
  auto [sq13, nsq13] = squares_nonsquares(construct_field(13, 1));
  CHECK(sq13 == std::vector<int>{1, 3, 4, 9, 10, 12});

  CHECK_THROWS_AS(squares_nonsquares(construct_field(2, 3)), parameter_error); // even order
}

TEST_CASE("cyclotomic classes partition the multiplicative group") {
  auto f17 = construct_field(17, 1);
  auto cls = compute_cyclotomic_classes(f17, 4);
  CHECK(cls.index_e == 4);
  CHECK(cls.generator == 3);
  REQUIRE(cls.classes.size() == 4);
  CHECK(cls.classes[0] == std::vector<int>{1, 4, 13, 16});
  std::set<int> all;
  for (const auto& c : cls.classes) {
    CHECK(c.size() == 4);
    CHECK(std::is_sorted(c.begin(), c.end()));
    all.insert(c.begin(), c.end());
  }
  CHECK(all.size() == 16);
  CHECK(all.count(0) == 0);

  auto f13 = construct_field(13, 1);
  auto cls13 = compute_cyclotomic_classes(f13, 4);
  CHECK(cls13.classes[0] == std::vector<int>{1, 3, 9}); // powers of 2^4 mod 13

  CHECK_THROWS_AS(compute_cyclotomic_classes(f17, 5), parameter_error); // 5 does not divide 16
}
