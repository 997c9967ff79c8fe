#include "sedf/family.hpp"

#include <algorithm>

namespace sedf {

namespace {

void check_block(const std::vector<int>& b, int n) {
  for (int x : b)
    if (x < 0 || x >= n) throw validation_error("block element index out of range");
  if (std::adjacent_find(b.begin(), b.end()) != b.end())
    throw validation_error("repeated element within a block");
  if (!std::is_sorted(b.begin(), b.end()))
    throw validation_error("block not sorted");
}

void check_disjoint(const std::vector<std::vector<int>>& blocks, int n) {
  std::vector<char> seen(n, 0);
  for (const auto& b : blocks)
    for (int x : b) {
      if (seen[x]) throw validation_error("blocks are not pairwise disjoint");
      seen[x] = 1;
    }
}

// shared shape gate for the (co-)EDF/SEDF verifiers
int uniform_block_size(const block_family& fam) {
  if (fam.blocks.size() < 2) throw shape_error("need at least two blocks");
  std::size_t k = fam.blocks.front().size();
  for (const auto& b : fam.blocks)
    if (b.size() != k) throw shape_error("blocks must share one size");
  if (k == 0) throw shape_error("blocks must be nonempty");
  return static_cast<int>(k);
}

enum class diff_dir { right, left }; // x y^-1 vs y^-1 x

void accumulate_external(const block_family& fam, std::size_t i,
                         difference_counter& counter, diff_dir dir) {
  const finite_group& g = *fam.group;
  for (std::size_t j = 0; j < fam.blocks.size(); ++j) {
    if (j == i) continue;
    for (int x : fam.blocks[i])
      for (int y : fam.blocks[j])
        counter.add(dir == diff_dir::right ? g.rdiv(x, y) : g.ldiv(x, y));
  }
}

bool flat_external_lambda(const block_family& fam, int lambda, diff_dir dir) {
  validate_family(fam);
  uniform_block_size(fam);
  difference_counter counter(fam.group->order());
  for (std::size_t i = 0; i < fam.blocks.size(); ++i)
    accumulate_external(fam, i, counter, dir);
  if (counter.count(0) != 0) return false;
  for (int d = 1; d < fam.group->order(); ++d)
    if (counter.count(d) != lambda) return false;
  return true;
}

bool per_block_external_lambda(const block_family& fam,
                               const std::vector<int>& lambdas, diff_dir dir) {
  validate_family(fam);
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    difference_counter counter(fam.group->order());
    accumulate_external(fam, i, counter, dir);
    if (counter.count(0) != 0) return false;
    for (int d = 1; d < fam.group->order(); ++d)
      if (counter.count(d) != lambdas[i]) return false;
  }
  return true;
}

} // namespace

void validate_family(const block_family& fam) {
  if (!fam.group) throw validation_error("family has no group");
  int n = fam.group->order();
  for (const auto& b : fam.blocks) check_block(b, n);
  check_disjoint(fam.blocks, n);
}

block_family make_family(group_ptr g, std::vector<std::vector<int>> blocks) {
  if (!g) throw validation_error("family has no group");
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  block_family fam{std::move(g), std::move(blocks)};
  validate_family(fam);
  return fam;
}

difference_counter difference_multiset(const std::vector<int>& a,
                                       const std::vector<int>& b,
                                       const finite_group& g) {
  if (a.empty() || b.empty()) throw validation_error("difference sets must be nonempty");
  std::vector<char> in_a(g.order(), 0);
  for (int x : a) in_a[x] = 1;
  for (int y : b)
    if (in_a[y]) throw validation_error("difference sets must be disjoint");
  difference_counter counter(g.order());
  for (int x : a)
    for (int y : b) counter.add(g.rdiv(x, y));
  return counter;
}

bool verify_edf(const block_family& fam, int lambda) {
  if (lambda < 1) throw parameter_error("lambda must be positive");
  return flat_external_lambda(fam, lambda, diff_dir::right);
}

bool verify_sedf(const block_family& fam, int lambda) {
  if (lambda < 1) throw parameter_error("lambda must be positive");
  validate_family(fam);
  uniform_block_size(fam);
  std::vector<int> lambdas(fam.blocks.size(), lambda);
  return per_block_external_lambda(fam, lambdas, diff_dir::right);
}

bool verify_cosedf(const block_family& fam, int lambda) {
  if (lambda < 1) throw parameter_error("lambda must be positive");
  validate_family(fam);
  uniform_block_size(fam);
  std::vector<int> lambdas(fam.blocks.size(), lambda);
  return per_block_external_lambda(fam, lambdas, diff_dir::left);
}

bool verify_gsedf(const block_family& fam, const gsedf_profile& profile) {
  validate_family(fam);
  if (fam.blocks.size() < 2) throw shape_error("need at least two blocks");
  if (profile.sizes.size() != fam.blocks.size() ||
      profile.lambdas.size() != fam.blocks.size())
    throw shape_error("profile length must match block count");
  for (std::size_t i = 0; i < fam.blocks.size(); ++i) {
    if (profile.sizes[i] < 1 || profile.lambdas[i] < 1)
      throw parameter_error("profile entries must be positive");
    if (static_cast<std::size_t>(profile.sizes[i]) != fam.blocks[i].size())
      throw shape_error("block size differs from profile");
  }
  return per_block_external_lambda(fam, profile.lambdas, diff_dir::right);
}

block_family invert_family(const block_family& fam) {
  block_family out{fam.group, fam.blocks};
  for (auto& b : out.blocks) {
    for (int& x : b) x = fam.group->inv(x);
    std::sort(b.begin(), b.end());
  }
  return out;
}

block_family translate_family(const block_family& fam, int g, translate_side side) {
  if (g < 0 || g >= fam.group->order()) throw parameter_error("translate element out of range");
  block_family out{fam.group, fam.blocks};
  for (auto& b : out.blocks) {
    for (int& x : b) x = side == translate_side::left ? fam.group->mul(g, x) : fam.group->mul(x, g);
    std::sort(b.begin(), b.end());
  }
  return out;
}

block_family map_family(const block_family& fam, const group_map& phi) {
  if (!phi.source || (phi.source != fam.group && !phi.source->same_table(*fam.group)))
    throw validation_error("map domain differs from family group");
  block_family out{phi.target, fam.blocks};
  for (auto& b : out.blocks) {
    for (int& x : b) x = phi(x);
    std::sort(b.begin(), b.end());
  }
  return out;
}

bool verify_pds(const std::vector<int>& d, const finite_group& g, int k, int lam, int mu) {
  if (k < 1) throw parameter_error("set size must be positive");
  if (lam < 0 || mu < 0) throw parameter_error("difference counts must be non-negative");
  if (!g.abelian()) throw precondition_error("partial difference sets handled only in abelian groups");
  std::vector<char> in_d(g.order(), 0);
  for (int x : d) {
    if (x < 0 || x >= g.order()) throw validation_error("element index out of range");
    if (x == 0) throw precondition_error("identity may not belong to a partial difference set");
    in_d[x] = 1;
  }
  if (static_cast<int>(d.size()) != k) return false;
  std::vector<int> counts(g.order(), 0);
  for (int x : d)
    for (int y : d)
      if (x != y) ++counts[g.rdiv(x, y)];
  for (int e = 1; e < g.order(); ++e)
    if (counts[e] != (in_d[e] ? lam : mu)) return false;
  return true;
}

} // namespace sedf
