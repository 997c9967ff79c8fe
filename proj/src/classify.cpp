#include "sedf/classify.hpp"

#include <algorithm>
#include <map>

namespace sedf {

namespace {

// sorted image block list of fam under x -> left * alpha(x) * right
std::vector<std::vector<int>> transform_blocks(const block_family& fam,
                                               const group_map& alpha, int left,
                                               int right) {
  const finite_group& tgt = *alpha.target;
  std::vector<std::vector<int>> out(fam.blocks.size());
  for (std::size_t b = 0; b < fam.blocks.size(); ++b) {
    out[b].reserve(fam.blocks[b].size());
    for (int x : fam.blocks[b]) out[b].push_back(tgt.mul(tgt.mul(left, alpha(x)), right));
    std::sort(out[b].begin(), out[b].end());
  }
  return out;
}

// walk every (alpha, left, right) triple; abelian targets collapse the two
// translations into one right translate
template <typename Fn>
void for_each_transform(const block_family& fam, const std::vector<group_map>& maps, Fn&& fn) {
  for (const auto& alpha : maps) {
    const finite_group& tgt = *alpha.target;
    int n = tgt.order();
    if (tgt.abelian()) {
      for (int t = 0; t < n; ++t)
        if (fn(alpha, 0, t)) return;
    } else {
      for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g)
          if (fn(alpha, h, g)) return;
    }
  }
}

bool same_shape(const block_family& x, const block_family& y) {
  if (x.blocks.size() != y.blocks.size()) return false;
  auto sizes = [](const block_family& f) {
    std::vector<std::size_t> s;
    for (const auto& b : f.blocks) s.push_back(b.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  return sizes(x) == sizes(y);
}

// match transformed blocks of x onto y's blocks; identity alignment when
// permutation is disallowed
std::optional<std::vector<int>> match_blocks(const std::vector<std::vector<int>>& image,
                                             const block_family& y, bool allow_perm) {
  std::vector<int> perm(image.size(), -1);
  if (!allow_perm) {
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (image[i] != y.blocks[i]) return std::nullopt;
      perm[i] = static_cast<int>(i);
    }
    return perm;
  }
  std::vector<char> used(y.blocks.size(), 0);
  for (std::size_t i = 0; i < image.size(); ++i) {
    bool hit = false;
    for (std::size_t j = 0; j < y.blocks.size() && !hit; ++j)
      if (!used[j] && image[i] == y.blocks[j]) {
        used[j] = 1;
        perm[i] = static_cast<int>(j);
        hit = true;
      }
    if (!hit) return std::nullopt;
  }
  return perm;
}

} // namespace

std::optional<equivalence_witness> equivalent(const block_family& x, const block_family& y,
                                              bool allow_block_permutation) {
  validate_family(x);
  validate_family(y);
  if (!same_shape(x, y)) throw shape_error("families differ in block count or sizes");

  std::vector<group_map> maps;
  if (x.group == y.group || x.group->same_table(*y.group)) {
    maps = automorphisms(x.group);
    // re-target at y's group object so witnesses compose cleanly
    for (auto& a : maps) {
      a.source = x.group;
      a.target = y.group;
    }
  } else {
    auto iso = find_isomorphism(x.group, y.group);
    if (!iso) return std::nullopt;
    for (const auto& a : automorphisms(x.group)) {
      group_map combined = compose(*iso, a); // iso after automorphism
      combined.source = x.group;
      combined.target = y.group;
      maps.push_back(std::move(combined));
    }
  }

  std::optional<equivalence_witness> found;
  for_each_transform(x, maps, [&](const group_map& alpha, int h, int g) {
    auto image = transform_blocks(x, alpha, h, g);
    auto perm = match_blocks(image, y, allow_block_permutation);
    if (!perm) return false;
    found = equivalence_witness{alpha, h, g, std::move(*perm)};
    return true;
  });
  return found;
}

canonical_form canonical_form_of(const block_family& fam) {
  validate_family(fam);
  auto maps = automorphisms(fam.group);
  std::optional<std::vector<std::vector<int>>> best;
  for_each_transform(fam, maps, [&](const group_map& alpha, int h, int g) {
    auto image = transform_blocks(fam, alpha, h, g);
    std::sort(image.begin(), image.end());
    if (!best || image < *best) best = std::move(image);
    return false; // scan the whole transform set
  });
  return canonical_form{std::move(*best)};
}

std::vector<family_class> classify_families(const std::vector<block_family>& fams) {
  if (fams.empty()) return {};
  for (const auto& f : fams)
    if (f.group != fams.front().group && !f.group->same_table(*fams.front().group))
      throw validation_error("families to classify must share one group");

  std::map<canonical_form, family_class> classes;
  for (std::size_t i = 0; i < fams.size(); ++i) {
    auto key = canonical_form_of(fams[i]);
    auto it = classes.find(key);
    if (it == classes.end()) {
      block_family rep{fams[i].group, key.key};
      it = classes.emplace(std::move(key), family_class{std::move(rep), {}}).first;
    }
    it->second.members.push_back(i);
  }
  std::vector<family_class> out;
  out.reserve(classes.size());
  for (auto& [key, cls] : classes) out.push_back(std::move(cls));
  return out;
}

} // namespace sedf
