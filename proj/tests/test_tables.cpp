#include <string>
#include <vector>

#include "doctest.h"
#include "reference_data.hpp"
#include "sedf/constructions.hpp"
#include "sedf/tables.hpp"

using namespace sedf;

TEST_CASE("construction matching tags a family with every route that reaches it") {
  auto pa = construct_pa_st(4);
  CHECK(matching_constructions(pa, {17, 2, 4, 1}) == std::vector<std::string>{"pa-st"});

  auto ek = construct_even_k(2);
  CHECK(matching_constructions(ek, {17, 2, 4, 1}) ==
        std::vector<std::string>{"cyclotomic", "even-k"});

  auto p5 = construct_paley(5);
  CHECK(matching_constructions(p5, {5, 2, 2, 1}) ==
        std::vector<std::string>{"pa-st", "paley", "even-k"});

  auto p13 = construct_paley(13);
  CHECK(matching_constructions(p13, {13, 2, 6, 3}) == std::vector<std::string>{"paley"});

  auto dih = construct_dihedral_sedf(3);
  CHECK(matching_constructions(dih, {10, 2, 3, 1}) == std::vector<std::string>{"dihedral"});
}

TEST_CASE("abelian sweep up to order 13 reproduces the known class counts") {
  auto cells = abelian_result_cells(13);
  REQUIRE(cells.size() == 9);

  auto expect = [&](std::size_t i, param_set p, const std::string& gname,
                    std::size_t classes) {
    CAPTURE(i);
    CHECK(cells[i].params == p);
    CHECK(cells[i].group->name() == gname);
    CHECK(cells[i].classes.size() == classes);
    CHECK(cells[i].case_tags.size() == classes);
    CHECK(cells[i].search_nodes > 0);
  };
  expect(0, {5, 2, 2, 1}, "Z5", 1);
  expect(1, {9, 2, 4, 2}, "Z9", 0);
  expect(2, {9, 2, 4, 2}, "Z3xZ3", 1);
  expect(3, {9, 3, 2, 1}, "Z9", 0);
  expect(4, {9, 3, 2, 1}, "Z3xZ3", 0);
  expect(5, {10, 2, 3, 1}, "Z10", 1);
  expect(6, {10, 3, 3, 2}, "Z10", 0);
  expect(7, {13, 2, 6, 3}, "Z13", 1);
  expect(8, {13, 4, 2, 1}, "Z13", 0);

  CHECK(cells[0].case_tags[0] == std::vector<std::string>{"pa-st", "paley", "even-k"});
  CHECK(cells[2].case_tags[0] == std::vector<std::string>{"paley"});
  CHECK(cells[5].case_tags[0] == std::vector<std::string>{"pa-st"});
  CHECK(cells[7].case_tags[0] == std::vector<std::string>{"paley"});

  CHECK(equivalent(cells[0].classes[0].representative, construct_pa_st(2)).has_value());
  CHECK(equivalent(cells[2].classes[0].representative, construct_paley(9)).has_value());
  CHECK(equivalent(cells[5].classes[0].representative, construct_pa_st(3)).has_value());
  CHECK(equivalent(cells[7].classes[0].representative, construct_paley(13)).has_value());
}

TEST_CASE("the nonabelian rows come out as tabulated") {
  auto cells = nonabelian_result_cells();
  REQUIRE(cells.size() == 3);

  CHECK(cells[0].params == param_set{10, 2, 3, 1});
  CHECK(!cells[0].group->abelian());
  REQUIRE(cells[0].classes.size() == 1);
  CHECK(cells[0].case_tags[0] == std::vector<std::string>{"dihedral"});
  CHECK(equivalent(cells[0].classes[0].representative, construct_dihedral_sedf(3))
            .has_value());

  CHECK(cells[1].params == param_set{21, 2, 10, 5});
  CHECK(cells[1].classes.empty());
  CHECK(cells[2].params == param_set{21, 6, 2, 1});
  CHECK(cells[2].classes.empty());
  CHECK(cells[1].group->same_table(*cells[2].group));
}
