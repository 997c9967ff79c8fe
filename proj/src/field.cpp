#include "sedf/field.hpp"

#include <algorithm>
#include <numeric>

namespace sedf {

namespace {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// polynomials over Z_p as coefficient vectors, constant term first
using poly = std::vector<int>;

poly trim(poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// remainder of a by monic b
poly poly_mod(poly a, const poly& b, int p) {
  int db = static_cast<int>(b.size()) - 1;
  a = trim(std::move(a));
  while (static_cast<int>(a.size()) - 1 >= db) {
    int da = static_cast<int>(a.size()) - 1;
    int c = a.back();
    for (int i = 0; i <= db; ++i) {
      int& t = a[da - db + i];
      t = ((t - static_cast<long long>(c) * b[i]) % p + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

poly poly_mul(const poly& a, const poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
  return r;
}

bool divides(const poly& d, const poly& a, int p) {
  return poly_mod(a, d, p).empty();
}

// reducible iff some monic polynomial of degree 1..deg/2 divides it
bool is_irreducible(const poly& a, int p) {
  int deg = static_cast<int>(a.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      poly div(d + 1, 0);
      long long t = v;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(t % p);
        t /= p;
      }
      div[d] = 1;
      if (divides(div, a, p)) return false;
    }
  }
  return true;
}

std::vector<long long> prime_factors(long long v) {
  std::vector<long long> fs;
  for (long long d = 2; d * d <= v; ++d)
    while (v % d == 0) {
      if (fs.empty() || fs.back() != d) fs.push_back(d);
      v /= d;
    }
  if (v > 1) fs.push_back(v);
  return fs;
}

} // namespace

finite_field::finite_field(int p, int e) : p_(p), e_(e) {
  if (!is_prime(p)) throw parameter_error("field characteristic must be prime");
  if (e < 1) throw parameter_error("extension degree must be positive");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > (1 << 20)) throw parameter_error("field order exceeds 2^20");
  }
  q_ = static_cast<int>(q);

  if (e == 1) {
    modulus_ = {0, 1}; // x, conventional and unused
  } else {
    // scan candidates in lexicographic (c0, c1, ..) order; big-endian digits
    // of v give the tuple so that v counts up in that order
    bool found = false;
    for (long long v = 0; v < q && !found; ++v) {
      poly cand(e + 1, 0);
      long long t = v;
      for (int i = e - 1; i >= 0; --i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[e] = 1;
      if (is_irreducible(cand, p)) {
        modulus_ = cand;
        found = true;
      }
    }
    if (!found) throw error("no irreducible modulus found");
  }

  auto factors = prime_factors(q_ - 1);
  generator_ = -1;
  for (int g = 1; g < q_ && generator_ < 0; ++g) {
    bool prim = true;
    for (long long f : factors)
      if (pow(g, (q_ - 1) / f) == 1) {
        prim = false;
        break;
      }
    if (prim) generator_ = g;
  }
  if (q_ > 2 && generator_ < 0) throw error("multiplicative group has no generator");
  if (q_ == 2) generator_ = 1;
}

std::vector<int> finite_field::coeffs(int a) const {
  std::vector<int> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

int finite_field::add(int a, int b) const {
  int r = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    r += (a % p_ + b % p_) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

int finite_field::neg(int a) const {
  int r = 0, mult = 1;
  for (int i = 0; i < e_; ++i) {
    r += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

int finite_field::mul(int a, int b) const {
  if (e_ == 1) return static_cast<int>(static_cast<long long>(a) * b % p_);
  poly pa = coeffs(a), pb = coeffs(b);
  poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  int v = 0, mult = 1;
  for (size_t i = 0; i < static_cast<size_t>(e_); ++i) {
    if (i < r.size()) v += r[i] * mult;
    mult *= p_;
  }
  return v;
}

int finite_field::pow(int a, long long k) const {
  k %= (q_ - 1) == 0 ? 1 : (q_ - 1);
  if (k < 0) k += q_ - 1;
  if (a == 0) return k == 0 ? 1 : 0;
  int r = 1, b = a;
  while (k > 0) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

int finite_field::inverse(int a) const {
  if (a == 0) throw parameter_error("zero has no multiplicative inverse");
  return pow(a, q_ - 2);
}

int finite_field::mul_order(int a) const {
  if (a == 0) throw parameter_error("zero has no multiplicative order");
  int ord = 1, x = a;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

std::string finite_field::label(int a) const {
  if (e_ == 1) return std::to_string(a);
  auto c = coeffs(a);
  std::string s = "(";
  for (int i = e_ - 1; i >= 0; --i) {
    s += std::to_string(c[i]);
    if (i > 0) s += ",";
  }
  return s + ")";
}

finite_field construct_field(int p, int e) { return finite_field(p, e); }

group_ptr additive_group(const finite_field& f) {
  int q = f.q();
  if (q > 2048) throw parameter_error("additive table too large (order > 2048)");
  std::vector<int> table(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) table[a * q + b] = f.add(a, b);
  std::vector<std::string> labels;
  labels.reserve(q);
  for (int a = 0; a < q; ++a) labels.push_back(f.label(a));
  std::string name;
  if (f.e() == 1) {
    name = "Z" + std::to_string(f.p());
  } else {
    for (int i = 0; i < f.e(); ++i) {
      if (i) name += "x";
      name += "Z" + std::to_string(f.p());
    }
  }
  // additive tables beyond the associativity bound are still correct by
  // construction; the check only runs for small q
  return std::make_shared<finite_group>(std::move(table), std::move(labels), name);
}

std::pair<std::vector<int>, std::vector<int>> squares_nonsquares(const finite_field& f) {
  if (f.q() % 2 == 0) throw parameter_error("every element of an even-order field is a square");
  std::vector<char> is_sq(f.q(), 0);
  for (int t = 1; t < f.q(); ++t) is_sq[f.mul(t, t)] = 1;
  std::vector<int> sq, nsq;
  for (int v = 1; v < f.q(); ++v) (is_sq[v] ? sq : nsq).push_back(v);
  return {std::move(sq), std::move(nsq)};
}

cyclotomic_classes compute_cyclotomic_classes(const finite_field& f, int e) {
  if (e < 1 || (f.q() - 1) % e != 0)
    throw parameter_error("class index must divide q-1");
  cyclotomic_classes out;
  out.index_e = e;
  out.generator = f.generator();
  out.classes.assign(e, {});
  int x = 1;
  for (int j = 0; j < f.q() - 1; ++j) {
    out.classes[j % e].push_back(x);
    x = f.mul(x, f.generator());
  }
  for (auto& c : out.classes) std::sort(c.begin(), c.end());
  return out;
}

} // namespace sedf
