// Finite field tables, polynomial arithmetic, irreducible enumeration, and
// duality classification.

#include "spb/gfpoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spb {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Fixed defining moduli for the supported prime powers (low degree first,
// monic leading 1 included).  Each is verified irreducible at construction.
const std::map<int, std::vector<int>>& fixed_moduli() {
  static const std::map<int, std::vector<int>> tbl = {
      {4, {1, 1, 1}},           // x^2+x+1 over F2
      {8, {1, 1, 0, 1}},        // x^3+x+1
      {16, {1, 1, 0, 0, 1}},    // x^4+x+1
      {9, {1, 0, 1}},           // x^2+1 over F3
      {27, {1, 2, 0, 1}},       // x^3+2x+1
      {25, {2, 0, 1}},          // x^2+2 over F5
      {125, {1, 1, 0, 1}},      // x^3+x+1
      {49, {1, 0, 1}},          // x^2+1 over F7
      {343, {2, 0, 0, 1}},      // x^3+2
      {121, {1, 0, 1}},         // x^2+1 over F11
      {169, {2, 0, 1}},         // x^2+2 over F13
  };
  return tbl;
}

// Digits base p <-> element index.
std::vector<int> digits_of(int v, int p, int f) {
  std::vector<int> d(f);
  for (int i = 0; i < f; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int index_of(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Plain F_p polynomial remainder, coefficients 0..p-1, modulus monic.
std::vector<int> fp_rem(std::vector<int> a, const std::vector<int>& m, int p) {
  int dm = static_cast<int>(m.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
    int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int k = i - dm + j;
      a[k] = ((a[k] - c * m[j]) % p + p) % p;
    }
  }
  a.resize(dm);
  for (int& x : a) x = ((x % p) + p) % p;
  return a;
}

bool fp_poly_irreducible(const std::vector<int>& m, int p) {
  // Trial division by every monic polynomial of degree 1..deg/2 over F_p.
  int d = static_cast<int>(m.size()) - 1;
  for (int dd = 1; 2 * dd <= d; ++dd) {
    int count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
      std::vector<int> div = digits_of(v, p, dd);
      div.push_back(1);
      auto r = fp_rem(m, div, p);
      if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

}  // namespace

GF::GF(int p, int f, const std::vector<int>& modulus) : p_(p), f_(f) {
  q_ = 1;
  for (int i = 0; i < f; ++i) q_ *= p;
  if (f > 1) {
    if (static_cast<int>(modulus.size()) != f + 1 || modulus.back() != 1)
      throw std::invalid_argument("defining modulus must be monic of degree f");
    if (!fp_poly_irreducible(modulus, p))
      throw std::logic_error("defining modulus is not irreducible");
  }
  addt_.assign(q_ * q_, 0);
  mult_.assign(q_ * q_, 0);
  negt_.assign(q_, 0);
  invt_.assign(q_, 0);
  frob_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits_of(a, p, f);
    for (int b = 0; b < q_; ++b) {
      auto db = digits_of(b, p, f);
      std::vector<int> s(f);
      for (int i = 0; i < f; ++i) s[i] = (da[i] + db[i]) % p;
      addt_[a * q_ + b] = index_of(s, p);
      std::vector<int> prod(2 * f - 1, 0);
      for (int i = 0; i < f; ++i)
        for (int j = 0; j < f; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
      std::vector<int> r = (f > 1) ? fp_rem(prod, modulus, p) : std::vector<int>{prod[0] % p};
      r.resize(f);
      mult_[a * q_ + b] = index_of(r, p);
    }
    std::vector<int> nd(f);
    for (int i = 0; i < f; ++i) nd[i] = (p - da[i]) % p;
    negt_[a] = index_of(nd, p);
  }
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b)
      if (mul(a, b) == 1) {
        invt_[a] = b;
        break;
      }
    if (invt_[a] == 0) throw std::logic_error("field element without inverse");
  }
  for (int a = 0; a < q_; ++a) {
    int r = 1;
    for (int i = 0; i < p; ++i) r = mul(r, a);
    // a^p computed by p-fold product; p is small for every supported field.
    frob_[a] = (a == 0) ? 0 : r;
  }
}

const GF& GF::get(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GF>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return *it->second;
  int p = 0, f = 0;
  if (is_prime(q) && q <= 97) {
    p = q;
    f = 1;
  } else {
    auto mit = fixed_moduli().find(q);
    if (mit == fixed_moduli().end())
      throw std::invalid_argument("unsupported field size q=" + std::to_string(q));
    // Recover p, f from q by factoring the prime power.
    for (int cand = 2; cand * cand <= q; ++cand) {
      if (q % cand == 0) {
        p = cand;
        break;
      }
    }
    int v = q;
    while (v > 1) {
      if (v % p != 0) throw std::invalid_argument("field size must be a prime power");
      v /= p;
      ++f;
    }
    auto gf = std::unique_ptr<GF>(new GF(p, f, mit->second));
    const GF& ref = *gf;
    cache.emplace(q, std::move(gf));
    return ref;
  }
  auto gf = std::unique_ptr<GF>(new GF(p, f, {}));
  const GF& ref = *gf;
  cache.emplace(q, std::move(gf));
  return ref;
}

int GF::inv(int a) const {
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return invt_[a];
}

int GF::pow(int a, long long e) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  int r = 1, b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool poly_is_monic(const Poly& a) { return !a.empty() && a.back() == 1; }

Poly poly_add(const GF& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  return poly_trim(std::move(r));
}

Poly poly_mul(const GF& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return poly_trim(std::move(r));
}

Poly poly_rem(const GF& F, Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  int db = poly_deg(b);
  int leadInv = F.inv(b.back());
  for (int i = poly_deg(a); i >= db; --i) {
    if (a[i] == 0) continue;
    int c = F.mul(a[i], leadInv);
    for (int j = 0; j <= db; ++j) a[i - db + j] = F.sub(a[i - db + j], F.mul(c, b[j]));
  }
  return poly_trim(std::move(a));
}

Poly poly_powmod(const GF& F, Poly base, unsigned long long e, const Poly& mod) {
  Poly r{1};
  base = poly_rem(F, std::move(base), mod);
  while (e > 0) {
    if (e & 1ULL) r = poly_rem(F, poly_mul(F, r, base), mod);
    base = poly_rem(F, poly_mul(F, base, base), mod);
    e >>= 1ULL;
  }
  return r;
}

Poly poly_x_minus(const GF& F, int c) { return poly_trim({F.neg(c), 1}); }

std::string poly_to_string(const Poly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_deg(a); i >= 0; --i) {
    if (a[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << a[i];
    } else {
      if (a[i] != 1) os << a[i];
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::vector<Poly> monic_irreducibles(const GF& F, int maxdeg) {
  std::vector<Poly> out;
  std::vector<std::vector<Poly>> byDeg(maxdeg + 1);
  for (int d = 1; d <= maxdeg; ++d) {
    unsigned long long count = ipow_checked(F.q(), d);
    for (unsigned long long v = 0; v < count; ++v) {
      Poly cand(d + 1);
      unsigned long long t = v;
      for (int i = 0; i < d; ++i) {
        cand[i] = static_cast<int>(t % F.q());
        t /= F.q();
      }
      cand[d] = 1;
      bool irred = true;
      for (int dd = 1; irred && 2 * dd <= d; ++dd)
        for (const auto& div : byDeg[dd]) {
          if (poly_rem(F, cand, div).empty()) {
            irred = false;
            break;
          }
        }
      if (irred) byDeg[d].push_back(std::move(cand));
    }
    out.insert(out.end(), byDeg[d].begin(), byDeg[d].end());
  }
  return out;
}

Poly poly_dual(const GF& F, const Poly& a) {
  if (a.empty() || a[0] == 0)
    throw std::invalid_argument("dual requires a nonzero constant term");
  Poly r(a.rbegin(), a.rend());  // X^d a(1/X)
  int c = F.inv(r.back());       // normalize monic: divide by a(0)
  for (int& x : r) x = F.mul(x, c);
  return poly_trim(std::move(r));
}

int padic_val(long long n, int p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  if (n < 0) n = -n;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long prime_to_part(long long n, int p) {
  if (n == 0) throw std::invalid_argument("prime-to-part of zero");
  while (n % p == 0) n /= p;
  return n;
}

long long mult_order(long long x, long long mod) {
  if (mod <= 1) throw std::invalid_argument("modulus must exceed 1");
  x %= mod;
  if (x < 0) x += mod;
  if (std::gcd(x, mod) != 1) throw std::invalid_argument("element not invertible");
  long long r = x % mod;
  long long ord = 1;
  while (r != 1) {
    r = (r * x) % mod;
    ++ord;
    if (ord > mod) throw std::logic_error("order search failed");
  }
  return ord;
}

unsigned long long ipow_checked(unsigned long long b, int e) {
  unsigned long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (b != 0 && r > ~0ULL / b) throw std::overflow_error("integer power overflow");
    r *= b;
  }
  return r;
}

bool roots_are_ell_prime(const GF& F, const Poly& a, int ell) {
  int d = poly_deg(a);
  if (d < 1) throw std::invalid_argument("constant polynomial");
  unsigned long long N = ipow_checked(F.q(), d) - 1;
  unsigned long long e = N;
  while (e % ell == 0) e /= ell;
  Poly x{0, 1};
  Poly r = poly_powmod(F, x, e, a);
  return r.size() == 1 && r[0] == 1;
}

std::vector<PolyClass> classify_polynomials(const GF& F, int ell, int maxdeg) {
  std::vector<PolyClass> out;
  Poly xm1 = poly_x_minus(F, 1);
  Poly xp1 = poly_trim({1, 1});
  out.push_back(PolyClass{Family::F0, xm1, xm1, 1, 1, 0});
  if (F.p() != 2) out.push_back(PolyClass{Family::F0, xp1, xp1, 1, 1, 0});

  std::vector<PolyClass> rest;
  std::set<Poly> seen;
  for (const auto& g : monic_irreducibles(F, maxdeg)) {
    if (g[0] == 0) continue;  // X itself: root 0 never occurs
    if (g == xm1 || (F.p() != 2 && g == xp1)) continue;
    if (seen.count(g)) continue;
    if (!roots_are_ell_prime(F, g, ell)) continue;
    Poly d = poly_dual(F, g);
    if (d == g) {
      int deg = poly_deg(g);
      if (deg % 2 != 0) throw std::logic_error("self-dual irreducible of odd degree");
      if (deg <= maxdeg) rest.push_back(PolyClass{Family::F1, g, g, deg, deg / 2, -1});
      seen.insert(g);
    } else {
      seen.insert(g);
      seen.insert(d);
      const Poly& lo = std::min(g, d);
      const Poly& hi = std::max(g, d);
      int deg = 2 * poly_deg(g);
      if (deg <= maxdeg) rest.push_back(PolyClass{Family::F2, lo, hi, deg, poly_deg(g), +1});
    }
  }
  std::sort(rest.begin(), rest.end(), [](const PolyClass& a, const PolyClass& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.gamma < b.gamma;
  });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace spb
