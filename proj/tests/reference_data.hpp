#pragma once

// Hand-transcribed reference values the library must reproduce. Everything
// here was written down independently of the implementation (from the known
// published tables and example families for strong external difference
// families), so the tests compare two unrelated derivations.

#include <array>
#include <vector>

namespace refdata {

// All admissible nontrivial (n, m, k, lambda) with n <= 64, ascending by
// (n, m, k). The n <= 24 slice is the first 18 rows.
inline const std::vector<std::array<int, 4>> admissible_to_64 = {
    {5, 2, 2, 1},    {9, 2, 4, 2},    {9, 3, 2, 1},    {10, 2, 3, 1},
    {10, 3, 3, 2},   {13, 2, 6, 3},   {13, 4, 2, 1},   {17, 2, 4, 1},
    {17, 2, 8, 4},   {17, 3, 4, 2},   {17, 4, 4, 3},   {17, 5, 2, 1},
    {19, 2, 6, 2},   {19, 3, 3, 1},   {19, 3, 6, 4},   {19, 5, 3, 2},
    {21, 2, 10, 5},  {21, 6, 2, 1},   {25, 2, 12, 6},  {25, 3, 6, 3},
    {25, 4, 4, 2},   {25, 7, 2, 1},   {26, 2, 5, 1},   {26, 2, 10, 4},
    {26, 3, 5, 2},   {26, 4, 5, 3},   {26, 5, 5, 4},   {28, 2, 9, 3},
    {28, 3, 9, 6},   {28, 4, 3, 1},   {28, 4, 6, 4},   {28, 7, 3, 2},
    {29, 2, 14, 7},  {29, 8, 2, 1},   {33, 2, 8, 2},   {33, 2, 16, 8},
    {33, 3, 4, 1},   {33, 3, 8, 4},   {33, 4, 8, 6},   {33, 5, 4, 2},
    {33, 7, 4, 3},   {33, 9, 2, 1},   {37, 2, 6, 1},   {37, 2, 12, 4},
    {37, 2, 18, 9},  {37, 3, 6, 2},   {37, 3, 12, 8},  {37, 4, 6, 3},
    {37, 5, 3, 1},   {37, 5, 6, 4},   {37, 6, 6, 5},   {37, 9, 3, 2},
    {37, 10, 2, 1},  {41, 2, 20, 10}, {41, 3, 10, 5},  {41, 6, 4, 2},
    {41, 11, 2, 1},  {45, 2, 22, 11}, {45, 12, 2, 1},  {46, 2, 15, 5},
    {46, 3, 15, 10}, {46, 6, 3, 1},   {46, 6, 6, 4},   {46, 11, 3, 2},
    {49, 2, 12, 3},  {49, 2, 24, 12}, {49, 3, 12, 6},  {49, 4, 4, 1},
    {49, 4, 8, 4},   {49, 4, 12, 9},  {49, 5, 6, 3},   {49, 7, 4, 2},
    {49, 10, 4, 3},  {49, 13, 2, 1},  {50, 2, 7, 1},   {50, 2, 14, 4},
    {50, 2, 21, 9},  {50, 3, 7, 2},   {50, 3, 14, 8},  {50, 4, 7, 3},
    {50, 5, 7, 4},   {50, 6, 7, 5},   {50, 7, 7, 6},   {51, 2, 10, 2},
    {51, 2, 20, 8},  {51, 3, 5, 1},   {51, 3, 10, 4},  {51, 3, 15, 9},
    {51, 4, 10, 6},  {51, 5, 5, 2},   {51, 5, 10, 8},  {51, 7, 5, 3},
    {51, 9, 5, 4},   {53, 2, 26, 13}, {53, 14, 2, 1},  {55, 2, 18, 6},
    {55, 3, 9, 3},   {55, 3, 18, 12}, {55, 4, 6, 2},   {55, 4, 12, 8},
    {55, 5, 9, 6},   {55, 7, 3, 1},   {55, 7, 6, 4},   {55, 13, 3, 2},
    {57, 2, 28, 14}, {57, 3, 14, 7},  {57, 8, 4, 2},   {57, 15, 2, 1},
    {61, 2, 30, 15}, {61, 4, 10, 5},  {61, 6, 6, 3},   {61, 16, 2, 1},
    {64, 2, 21, 7},  {64, 3, 21, 14}, {64, 8, 3, 1},   {64, 8, 6, 4},
    {64, 15, 3, 2},
};

constexpr std::size_t admissible_to_24_count = 18;

// Known example families, as element-index block lists.
using blocks_t = std::vector<std::vector<int>>;

// arithmetic progressions in Z_{k^2+1}
inline const blocks_t pa_st_2 = {{0, 1}, {2, 4}};            // Z5
inline const blocks_t pa_st_3 = {{0, 1, 2}, {3, 6, 9}};      // Z10
inline const blocks_t pa_st_4 = {{0, 1, 2, 3}, {4, 8, 12, 16}}; // Z17

// squares / non-squares
inline const blocks_t paley_5 = {{1, 4}, {2, 3}};
inline const blocks_t paley_9 = {{1, 2, 3, 6}, {4, 5, 7, 8}}; // GF(9) additive indices
inline const blocks_t paley_13 = {{1, 3, 4, 9, 10, 12}, {2, 5, 6, 7, 8, 11}};
inline const blocks_t paley_17 = {{1, 2, 4, 8, 9, 13, 15, 16}, {3, 5, 6, 7, 10, 11, 12, 14}};

// even-k interleaved runs in Z_{4a^2+1}
inline const blocks_t even_k_1 = {{0, 2}, {3, 4}};                       // Z5
inline const blocks_t even_k_2 = {{0, 1, 4, 5}, {6, 8, 14, 16}};         // Z17
inline const blocks_t even_k_3 = {{0, 1, 2, 6, 7, 8}, {9, 12, 21, 24, 33, 36}}; // Z37

// fourth-power cyclotomic class pair in GF(17)
inline const blocks_t cyclotomic_17 = {{1, 4, 13, 16}, {2, 8, 9, 15}};

// dihedral family in D10 ({e, r, s}, {r^3, sr, sr^4}) and its element-wise
// inverse ({e, r^4, s}, {r^2, sr, sr^4})
inline const blocks_t dihedral_10 = {{0, 1, 5}, {3, 6, 9}};
inline const blocks_t dihedral_10_inverse = {{0, 4, 5}, {2, 6, 9}};

// (7,2;2,3;1,1) base of the two-block recursion and the (145,2,12,1) family
// it blows up to with (a,b) = (6,4)
inline const blocks_t gsedf_base_7 = {{0, 3}, {4, 5, 6}};
inline const blocks_t gsedf_145 = {
    {0, 1, 2, 3, 4, 5, 18, 19, 20, 21, 22, 23},
    {24, 30, 36, 60, 66, 72, 96, 102, 108, 132, 138, 144}};

// Expected class counts for every (parameters, abelian group) pair with
// n <= 24; pairs not listed here have count 0. Tag lists name the
// constructions each class must match, in the library's fixed tag order.
struct abelian_cell_expect {
  std::array<int, 4> params;
  const char* group;
  int classes;
  std::vector<std::vector<std::string>> tags; // per class
};

inline const std::vector<abelian_cell_expect> abelian_nonzero_cells = {
    {{5, 2, 2, 1}, "Z5", 1, {{"pa-st", "paley", "even-k"}}},
    {{9, 2, 4, 2}, "Z3xZ3", 1, {{"paley"}}},
    {{10, 2, 3, 1}, "Z10", 1, {{"pa-st"}}},
    {{13, 2, 6, 3}, "Z13", 1, {{"paley"}}},
    {{17, 2, 4, 1}, "Z17", 2, {{"pa-st"}, {"cyclotomic", "even-k"}}},
    {{17, 2, 8, 4}, "Z17", 1, {{"paley"}}},
};

} // namespace refdata
