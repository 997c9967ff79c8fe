#include "sedf/group.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace sedf {

finite_group::finite_group(std::vector<int> table, std::vector<std::string> labels,
                           std::string name, int assoc_bound)
    : table_(std::move(table)), labels_(std::move(labels)), name_(std::move(name)) {
  long long n2 = static_cast<long long>(table_.size());
  int n = 0;
  while (static_cast<long long>(n) * n < n2) ++n;
  if (n == 0 || static_cast<long long>(n) * n != n2)
    throw validation_error("group table is not square");
  n_ = n;

  for (int v : table_)
    if (v < 0 || v >= n) throw validation_error("table entry out of range");

  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n)
    throw validation_error("label count does not match group order");
  {
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw validation_error("duplicate element label");
  }

  for (int j = 0; j < n; ++j)
    if (mul(0, j) != j) throw validation_error("identity is not at index 0");
  for (int i = 0; i < n; ++i)
    if (mul(i, 0) != i) throw validation_error("identity is not at index 0");

  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) seen[mul(i, j)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw validation_error("row is not a permutation (not a Latin square)");
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) seen[mul(i, j)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw validation_error("column is not a permutation (not a Latin square)");
  }

  inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (mul(i, j) == 0 && mul(j, i) == 0) {
        inv_[i] = j;
        break;
      }
    if (inv_[i] < 0) throw validation_error("element lacks a two-sided inverse");
  }

  if (n <= assoc_bound) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw validation_error("table is not associative");
  }

  abelian_ = true;
  for (int a = 0; a < n && abelian_; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) {
        abelian_ = false;
        break;
      }
}

int finite_group::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

int finite_group::index_of(const std::string& label) const {
  for (int i = 0; i < n_; ++i)
    if (labels_[i] == label) return i;
  return -1;
}

bool finite_group::same_table(const finite_group& o) const {
  return n_ == o.n_ && table_ == o.table_;
}

std::vector<int> finite_group::order_profile() const {
  std::vector<int> prof(n_);
  for (int i = 0; i < n_; ++i) prof[i] = element_order(i);
  std::sort(prof.begin(), prof.end());
  return prof;
}

group_ptr construct_cyclic(int n) {
  if (n < 1) throw parameter_error("cyclic group order must be positive");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<finite_group>(std::move(table), std::move(labels),
                                        "Z" + std::to_string(n));
}

namespace {

// "(1,0)" -> "1,0" so nested products read "(a,b,c)" instead of "((a,b),c)"
std::string strip_tuple(const std::string& s) {
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    return s.substr(1, s.size() - 2);
  return s;
}

} // namespace

group_ptr construct_direct_product(const group_ptr& a, const group_ptr& b) {
  int na = a->order(), nb = b->order();
  int n = na * nb;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    int xa = i / nb, xb = i % nb;
    for (int j = 0; j < n; ++j) {
      int ya = j / nb, yb = j % nb;
      table[i * n + j] = a->mul(xa, ya) * nb + b->mul(xb, yb);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) {
    int xa = i / nb, xb = i % nb;
    labels.push_back("(" + strip_tuple(a->label(xa)) + "," + strip_tuple(b->label(xb)) + ")");
  }
  return std::make_shared<finite_group>(std::move(table), std::move(labels),
                                        a->name() + "x" + b->name());
}

group_ptr construct_dihedral(int order) {
  if (order < 2 || order % 2 != 0)
    throw parameter_error("dihedral group order must be even and at least 2");
  int h = order / 2;
  int n = order;
  // index(s^i r^j) = i*h + j
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < h; ++j1)
      for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < h; ++j2) {
          // s^i1 r^j1 s^i2 r^j2 = s^(i1+i2) r^(j1*(-1)^i2 + j2)
          int i = (i1 + i2) % 2;
          int j = ((i2 ? h - j1 : j1) + j2) % h;
          table[(i1 * h + j1) * n + (i2 * h + j2)] = i * h + j;
        }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < h; ++j) {
      std::string base = i ? "s" : "";
      if (j == 0)
        labels.push_back(i ? "s" : "e");
      else if (j == 1)
        labels.push_back(base + "r");
      else
        labels.push_back(base + "r^" + std::to_string(j));
    }
  return std::make_shared<finite_group>(std::move(table), std::move(labels),
                                        "D" + std::to_string(order));
}

namespace {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

int pow_mod(int base, int exp, int mod) {
  long long r = 1, b = base % mod;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
  }
  return static_cast<int>(r);
}

} // namespace

group_ptr construct_semidirect(int p, int q, int action) {
  if (!is_prime(p) || !is_prime(q))
    throw parameter_error("semidirect product requires prime p and q");
  if ((p - 1) % q != 0)
    throw parameter_error("q must divide p-1");
  action = ((action % p) + p) % p;
  // action must have multiplicative order exactly q mod p
  if (action == 0 || pow_mod(action, q, p) != 1)
    throw parameter_error("action does not have order q mod p");
  for (int d = 1; d < q; ++d)
    if (pow_mod(action, d, p) == 1)
      throw parameter_error("action does not have order q mod p");

  int n = p * q;
  // index(x,y) = y*p + x, lexicographic in (y,x); identity (0,0) at 0
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int y1 = 0; y1 < q; ++y1)
    for (int x1 = 0; x1 < p; ++x1)
      for (int y2 = 0; y2 < q; ++y2)
        for (int x2 = 0; x2 < p; ++x2) {
          int x = (x1 + static_cast<long long>(pow_mod(action, y1, p)) * x2 % p) % p;
          int y = (y1 + y2) % q;
          table[(y1 * p + x1) * n + (y2 * p + x2)] = y * p + x;
        }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int y = 0; y < q; ++y)
    for (int x = 0; x < p; ++x)
      labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
  return std::make_shared<finite_group>(
      std::move(table), std::move(labels),
      "SD(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(action) + ")");
}

group_ptr parse_cayley_table(std::istream& in, const std::string& name) {
  long long n_ll;
  if (!(in >> n_ll)) throw parse_error("missing group order");
  if (n_ll < 1 || n_ll > 100000) throw parse_error("group order out of range");
  int n = static_cast<int>(n_ll);
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n);
  for (long long i = 0; i < n_ll * n_ll; ++i) {
    int v;
    if (!(in >> v)) throw parse_error("truncated multiplication table");
    table.push_back(v);
  }
  std::vector<std::string> labels;
  std::string tok;
  while (in >> tok) labels.push_back(tok);
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw parse_error("label line must carry exactly n labels");
  return std::make_shared<finite_group>(std::move(table), std::move(labels), name);
}

group_map identity_map(const group_ptr& g) {
  std::vector<int> img(g->order());
  for (int i = 0; i < g->order(); ++i) img[i] = i;
  return group_map{g, g, std::move(img)};
}

group_map compose(const group_map& f, const group_map& g) {
  if (!f.source->same_table(*g.target))
    throw validation_error("compose: inner map's target differs from outer map's source");
  std::vector<int> img(g.image.size());
  for (size_t i = 0; i < img.size(); ++i) img[i] = f.image[g.image[i]];
  return group_map{g.source, f.target, std::move(img)};
}

group_map inverse_map(const group_map& m) {
  std::vector<int> img(m.image.size());
  for (size_t i = 0; i < img.size(); ++i) img[m.image[i]] = static_cast<int>(i);
  return group_map{m.target, m.source, std::move(img)};
}

bool is_valid_map(const group_map& m) {
  const auto& s = *m.source;
  const auto& t = *m.target;
  int n = s.order();
  if (t.order() != n || static_cast<int>(m.image.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : m.image) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  if (m.image[0] != 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.image[s.mul(i, j)] != t.mul(m.image[i], m.image[j])) return false;
  return true;
}

namespace {

// smallest-index-first generating set: repeatedly adjoin the first element
// outside the subgroup generated so far
std::vector<int> greedy_generators(const finite_group& g) {
  int n = g.order();
  std::vector<char> in_sub(n, 0);
  in_sub[0] = 1;
  int covered = 1;
  std::vector<int> gens;
  std::vector<int> members{0};
  while (covered < n) {
    int pick = -1;
    for (int i = 1; i < n; ++i)
      if (!in_sub[i]) {
        pick = i;
        break;
      }
    gens.push_back(pick);
    // close the subgroup under right multiplication by all generators
    std::vector<int> frontier{0};
    std::vector<char> next_sub(n, 0);
    next_sub[0] = 1;
    std::vector<int> next_members{0};
    while (!frontier.empty()) {
      std::vector<int> fresh;
      for (int x : frontier)
        for (int ge : gens) {
          int y = g.mul(x, ge);
          if (!next_sub[y]) {
            next_sub[y] = 1;
            next_members.push_back(y);
            fresh.push_back(y);
          }
        }
      frontier = std::move(fresh);
    }
    in_sub = std::move(next_sub);
    members = std::move(next_members);
    covered = static_cast<int>(members.size());
  }
  return gens;
}

// Backtracking over generator images. Maintains a partial map defined on the
// subgroup generated by the assigned generators; consistency of every product
// x*gen against the map makes any full extension a homomorphism.
struct map_searcher {
  const finite_group& src;
  const finite_group& dst;
  std::vector<int> gens;
  std::vector<std::vector<int>> candidates; // per generator, same element order
  bool all_maps;                            // false: stop at first
  std::vector<group_map> out;
  group_ptr src_ptr, dst_ptr;

  map_searcher(const group_ptr& s, const group_ptr& d, bool all)
      : src(*s), dst(*d), all_maps(all), src_ptr(s), dst_ptr(d) {
    gens = greedy_generators(src);
    candidates.resize(gens.size());
    for (size_t t = 0; t < gens.size(); ++t) {
      int ord = src.element_order(gens[t]);
      for (int v = 0; v < dst.order(); ++v)
        if (dst.element_order(v) == ord) candidates[t].push_back(v);
    }
  }

  // extend the partial map over the subgroup generated by gens[0..depth];
  // returns false on any inconsistency or collision
  bool run() {
    std::vector<int> img(src.order(), -1);
    img[0] = 0;
    std::vector<char> used(dst.order(), 0);
    used[0] = 1;
    rec(0, img, used);
    return !out.empty();
  }

  void rec(size_t depth, std::vector<int>& img, std::vector<char>& used) {
    if (!all_maps && !out.empty()) return;
    if (depth == gens.size()) {
      for (int v : img)
        if (v < 0) return; // generators exhausted but group not covered
      out.push_back(group_map{src_ptr, dst_ptr, img});
      return;
    }
    for (int cand : candidates[depth]) {
      std::vector<int> next = img;
      std::vector<char> next_used = used;
      if (try_assign(depth, cand, next, next_used)) rec(depth + 1, next, next_used);
      if (!all_maps && !out.empty()) return;
    }
  }

  bool try_assign(size_t depth, int cand, std::vector<int>& img, std::vector<char>& used) {
    int gen = gens[depth];
    if (img[gen] >= 0) {
      if (img[gen] != cand) return false;
    } else {
      if (used[cand]) return false;
      img[gen] = cand;
      used[cand] = 1;
    }
    // recompute closure of gens[0..depth] with images, checking consistency
    std::vector<int> members{0};
    std::vector<char> in_sub(src.order(), 0);
    in_sub[0] = 1;
    for (size_t qi = 0; qi < members.size(); ++qi) {
      int x = members[qi];
      for (size_t t = 0; t <= depth; ++t) {
        int y = src.mul(x, gens[t]);
        int fy = dst.mul(img[x], img[gens[t]]);
        if (img[y] < 0) {
          if (used[fy]) return false;
          img[y] = fy;
          used[fy] = 1;
        } else if (img[y] != fy) {
          return false;
        }
        if (!in_sub[y]) {
          in_sub[y] = 1;
          members.push_back(y);
        }
      }
    }
    return true;
  }
};

} // namespace

std::vector<group_map> automorphisms(const group_ptr& g) {
  map_searcher s(g, g, /*all=*/true);
  s.run();
  std::sort(s.out.begin(), s.out.end(),
            [](const group_map& a, const group_map& b) { return a.image < b.image; });
  return s.out;
}

std::optional<group_map> find_isomorphism(const group_ptr& a, const group_ptr& b) {
  if (a->order() != b->order()) return std::nullopt;
  if (a->abelian() != b->abelian()) return std::nullopt;
  if (a->order_profile() != b->order_profile()) return std::nullopt;
  map_searcher s(a, b, /*all=*/false);
  if (!s.run()) return std::nullopt;
  return s.out.front();
}

} // namespace sedf
