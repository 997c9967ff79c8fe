#include "sedf/tables.hpp"

#include <cmath>

#include "sedf/catalog.hpp"
#include "sedf/constructions.hpp"
#include "sedf/search.hpp"

namespace sedf {

namespace {

bool square_root_of(int v, int* root) {
  if (v < 1) return false;
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(v))));
  for (int c = std::max(1, r - 1); c <= r + 1; ++c)
    if (c * c == v) {
      *root = c;
      return true;
    }
  return false;
}

bool equivalent_to_any(const block_family& fam, const std::vector<block_family>& cands) {
  for (const auto& c : cands)
    if (equivalent(c, fam)) return true;
  return false;
}

classified_cell run_cell(const param_set& p, group_ptr g, int jobs) {
  search_options opts;
  opts.jobs = jobs;
  auto result = search_all(g, p.m, p.k, p.lambda, opts);
  classified_cell cell;
  cell.params = p;
  cell.group = std::move(g);
  cell.classes = classify_families(result.families);
  cell.search_nodes = result.stats.nodes;
  for (const auto& cls : cell.classes)
    cell.case_tags.push_back(matching_constructions(cls.representative, p));
  return cell;
}

} // namespace

std::vector<std::string> matching_constructions(const block_family& fam, const param_set& p) {
  std::vector<std::string> tags;
  int root = 0;

  if (p.lambda == 1 && p.m == 2 && p.n == p.k * p.k + 1) {
    try {
      if (equivalent(construct_pa_st(p.k), fam)) tags.push_back("pa-st");
    } catch (const error&) {
    }
  }
  if (p.m == 2 && p.n % 4 == 1 && 2 * p.k == p.n - 1 && 4 * p.lambda == p.n - 1) {
    try {
      if (equivalent(construct_paley(p.n), fam)) tags.push_back("paley");
    } catch (const error&) {
    }
  }
  if (p.m == 2 && 4 * p.k == p.n - 1 && 16 * p.lambda == p.n - 1 &&
      (p.n - 1) % 16 == 0 && square_root_of((p.n - 1) / 16, &root)) {
    try {
      if (equivalent_to_any(fam, construct_cyclotomic(p.n, 4))) tags.push_back("cyclotomic");
    } catch (const error&) {
    }
  }
  if (p.m == 2 && 6 * p.k == p.n - 1 && 36 * p.lambda == p.n - 1 &&
      (p.n - 1) % 108 == 0 && square_root_of((p.n - 1) / 108, &root)) {
    try {
      if (equivalent_to_any(fam, construct_cyclotomic(p.n, 6))) tags.push_back("cyclotomic");
    } catch (const error&) {
    }
  }
  if (p.lambda == 1 && p.m == 2 && p.k % 2 == 0 && p.n == p.k * p.k + 1) {
    try {
      if (equivalent(construct_even_k(p.k / 2), fam)) tags.push_back("even-k");
    } catch (const error&) {
    }
  }
  if (p.lambda == 1 && p.m == 2 && p.k % 2 == 1 && p.k >= 3 && p.n == p.k * p.k + 1 &&
      !fam.group->abelian()) {
    try {
      if (equivalent(construct_dihedral_sedf(p.k), fam)) tags.push_back("dihedral");
    } catch (const error&) {
    }
  }
  return tags;
}

std::vector<classified_cell> abelian_result_cells(int max_order, int jobs) {
  std::vector<classified_cell> cells;
  for (const auto& p : enumerate_admissible(max_order))
    for (const auto& g : abelian_groups_of_order(p.n))
      cells.push_back(run_cell(p, g, jobs));
  return cells;
}

std::vector<classified_cell> nonabelian_result_cells(int jobs) {
  group_ptr d10 = nonabelian_groups_of_order(10).front();
  group_ptr f21 = nonabelian_groups_of_order(21).front();
  std::vector<classified_cell> cells;
  cells.push_back(run_cell({10, 2, 3, 1}, d10, jobs));
  cells.push_back(run_cell({21, 2, 10, 5}, f21, jobs));
  cells.push_back(run_cell({21, 6, 2, 1}, f21, jobs));
  return cells;
}

} // namespace sedf
