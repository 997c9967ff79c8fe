#include "sedf/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sedf/field.hpp"

namespace sedf {

namespace {

// q = p^e for prime p, or {0,0}
std::pair<int, int> prime_power_split(int q) {
  if (q < 2) return {0, 0};
  int p = 0;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return {q, 1};
  int e = 0, v = q;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return v == 1 ? std::pair<int, int>{p, e} : std::pair<int, int>{0, 0};
}

bool is_perfect_square(long long v) {
  if (v < 0) return false;
  long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  for (long long c = std::max(0LL, r - 2); c <= r + 2; ++c)
    if (c * c == v) return true;
  return false;
}

void confirm(bool ok, const char* what) {
  if (!ok) throw error(what);
}

// the two-block recursion formulas act on integer residues, so the base
// group's table must literally be addition of indices mod n
void require_integer_cyclic(const block_family& fam) {
  int n = fam.group->order();
  auto plain = construct_cyclic(n);
  if (!fam.group->same_table(*plain))
    throw precondition_error("base family must live in Z_n with index arithmetic");
}

void require_two_blocks_below(const block_family& fam) {
  if (fam.blocks.size() != 2) throw shape_error("recursion bases have two blocks");
  if (fam.blocks[0].empty() || fam.blocks[1].empty())
    throw shape_error("recursion base blocks must be nonempty");
  if (fam.blocks[0].back() >= fam.blocks[1].front())
    throw precondition_error("first block must lie entirely below the second");
}

} // namespace

block_family construct_trivial(group_ptr g) {
  if (!g) throw parameter_error("group required");
  int n = g->order();
  if (n < 2) throw parameter_error("need at least two singleton blocks");
  std::vector<std::vector<int>> blocks(n);
  for (int i = 0; i < n; ++i) blocks[i] = {i};
  auto fam = make_family(std::move(g), std::move(blocks));
  confirm(verify_sedf(fam, 1), "singleton family failed verification");
  return fam;
}

block_family construct_pa_st(int k) {
  if (k < 1) throw parameter_error("block size must be positive");
  int n = k * k + 1;
  std::vector<int> b1(k), b2(k);
  for (int i = 0; i < k; ++i) b1[i] = i;
  for (int i = 1; i <= k; ++i) b2[i - 1] = i * k;
  auto fam = make_family(construct_cyclic(n), {std::move(b1), std::move(b2)});
  confirm(verify_sedf(fam, 1), "arithmetic-progression family failed verification");
  return fam;
}

block_family construct_paley(int q) {
  auto [p, e] = prime_power_split(q);
  if (p == 0) throw parameter_error("order must be a prime power");
  if (q % 4 != 1) throw parameter_error("order must be 1 mod 4");
  finite_field f = construct_field(p, e);
  auto [sq, nsq] = squares_nonsquares(f);
  auto fam = make_family(additive_group(f), {std::move(sq), std::move(nsq)});
  confirm(verify_sedf(fam, (q - 1) / 4), "square/non-square family failed verification");
  return fam;
}

std::vector<block_family> construct_cyclotomic(int q, int e) {
  if (e != 4 && e != 6) throw parameter_error("class index must be 4 or 6");
  auto [p, deg] = prime_power_split(q);
  if (p == 0) throw parameter_error("order must be a prime power");
  if (e == 4) {
    if ((q - 1) % 16 != 0 || !is_perfect_square((q - 1) / 16))
      throw parameter_error("order must have the form 16t^2+1");
  } else {
    if ((q - 1) % 108 != 0 || !is_perfect_square((q - 1) / 108))
      throw parameter_error("order must have the form 108t^2+1");
    if (deg != 1) throw parameter_error("order must be prime for six classes");
  }
  finite_field f = construct_field(p, deg);
  auto classes = compute_cyclotomic_classes(f, e);
  group_ptr add = additive_group(f);
  int lambda = (q - 1) / (e * e);
  std::vector<block_family> out;
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) {
      auto fam = make_family(add, {classes.classes[i], classes.classes[j]});
      if (verify_sedf(fam, lambda)) out.push_back(std::move(fam));
    }
  confirm(!out.empty(), "no cyclotomic class pair verified");
  return out;
}

block_family construct_even_k(int a) {
  if (a < 1) throw parameter_error("multiplier must be positive");
  int n = 4 * a * a + 1;
  std::vector<int> b1, b2;
  for (int i = 0; i < a; ++i) b1.push_back(i);
  for (int i = 2 * a; i < 3 * a; ++i) b1.push_back(i);
  for (int i = 1; i <= a; ++i) {
    b2.push_back((4 * i - 1) * a);
    b2.push_back(4 * i * a);
  }
  auto fam = make_family(construct_cyclic(n), {std::move(b1), std::move(b2)});
  confirm(verify_sedf(fam, 1), "even-k family failed verification");
  return fam;
}

block_family recursive_lambda1(const block_family& base, int a) {
  if (a < 1) throw parameter_error("multiplier must be positive");
  require_integer_cyclic(base);
  require_two_blocks_below(base);
  int k = static_cast<int>(base.blocks[0].size());
  if (base.blocks[1].size() != static_cast<std::size_t>(k))
    throw shape_error("base blocks must share one size");
  if (base.group->order() != k * k + 1)
    throw precondition_error("base order must be k^2+1");
  if (!verify_sedf(base, 1)) throw precondition_error("base is not a lambda=1 family");

  long long np = static_cast<long long>(a) * k * a * k + 1;
  std::vector<int> b1, b2;
  for (int x : base.blocks[0])
    for (int al = 0; al < a; ++al) b1.push_back(static_cast<int>((static_cast<long long>(a) * x + al) % np));
  for (int y : base.blocks[1])
    for (int be = 0; be < a; ++be)
      b2.push_back(static_cast<int>(static_cast<long long>(a) * (y + static_cast<long long>(k) * k * be) % np));
  auto fam = make_family(construct_cyclic(static_cast<int>(np)), {std::move(b1), std::move(b2)});
  confirm(verify_sedf(fam, 1), "blown-up family failed verification");
  return fam;
}

std::optional<block_family> normalize_below(const block_family& fam) {
  require_integer_cyclic(fam);
  if (fam.blocks.size() != 2) throw shape_error("normalization handles two blocks");
  int n = fam.group->order();
  for (int c = 1; c < n; ++c) {
    if (std::gcd(c, n) != 1) continue;
    for (int t = 0; t < n; ++t)
      for (int swap = 0; swap < 2; ++swap) {
        block_family cand{fam.group, {}};
        cand.blocks.resize(2);
        for (int b = 0; b < 2; ++b) {
          for (int x : fam.blocks[swap ? 1 - b : b])
            cand.blocks[b].push_back((c * x + t) % n);
          std::sort(cand.blocks[b].begin(), cand.blocks[b].end());
        }
        if (!cand.blocks[0].empty() && !cand.blocks[1].empty() &&
            cand.blocks[0].back() < cand.blocks[1].front())
          return cand;
      }
  }
  return std::nullopt;
}

block_family recursive_gsedf(const block_family& base, const recursion_spec& spec) {
  if (spec.a < 1 || spec.b < 1 || spec.s < 1 || spec.t < 1)
    throw parameter_error("recursion parameters must be positive");
  require_integer_cyclic(base);
  require_two_blocks_below(base);
  if (base.blocks[0].size() != static_cast<std::size_t>(spec.s) ||
      base.blocks[1].size() != static_cast<std::size_t>(spec.t))
    throw shape_error("base block sizes must match the recursion spec");
  if (base.group->order() != spec.s * spec.t + 1)
    throw precondition_error("base order must be st+1");
  if (!verify_gsedf(base, {{spec.s, spec.t}, {1, 1}}))
    throw precondition_error("base is not a (1,1) generalized family");

  long long np = static_cast<long long>(spec.a) * spec.b * spec.s * spec.t + 1;
  std::vector<int> b1, b2;
  for (int x : base.blocks[0])
    for (int al = 0; al < spec.a; ++al)
      b1.push_back(static_cast<int>((static_cast<long long>(spec.a) * x + al) % np));
  for (int y : base.blocks[1])
    for (int be = 0; be < spec.b; ++be)
      b2.push_back(static_cast<int>(static_cast<long long>(spec.a) *
                                    (y + static_cast<long long>(be) * spec.s * spec.t) % np));
  auto fam = make_family(construct_cyclic(static_cast<int>(np)), {std::move(b1), std::move(b2)});
  confirm(verify_gsedf(fam, {{spec.a * spec.s, spec.b * spec.t}, {1, 1}}),
          "blown-up generalized family failed verification");
  return fam;
}

std::pair<block_family, block_family> composite_pair(int r, int a) {
  if (r < 2 || a < 2) throw parameter_error("both factors must be at least 2");
  block_family s1 = construct_pa_st(r);
  int n = r * r + 1;
  block_family s2{s1.group, s1.blocks};
  for (auto& b : s2.blocks) {
    for (int& x : b) x = r * x % n;
    std::sort(b.begin(), b.end());
  }
  confirm(verify_sedf(s2, 1), "scaled base family failed verification");
  return {recursive_lambda1(s1, a), recursive_lambda1(s2, a)};
}

block_family construct_dihedral_sedf(int k) {
  if (k < 3 || k % 2 == 0) throw parameter_error("rotation count must be odd and at least 3");
  int n = k * k + 1, h = n / 2;
  group_ptr g = construct_dihedral(n);
  auto rot = [&](int j) { return j % h; };
  auto refl = [&](int j) { return h + j % h; };
  std::vector<int> a1, a2;
  for (int j = 0; j <= (k - 1) / 2; ++j) a1.push_back(rot(j));
  for (int j = 0; j <= (k - 3) / 2; ++j) a1.push_back(refl(j));
  for (int i = 1; i <= (k - 1) / 2; ++i) a2.push_back(rot(i * k));
  for (int j = 0; j <= (k - 1) / 2; ++j) a2.push_back(refl(j * k + (k - 1) / 2));
  auto fam = make_family(std::move(g), {std::move(a1), std::move(a2)});
  confirm(verify_sedf(fam, 1), "dihedral family failed verification");
  return fam;
}

} // namespace sedf
