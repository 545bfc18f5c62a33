// Finite fields, polynomial arithmetic, duality, and the eigenvalue-class
// classification.

#include <map>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "spb/gfpoly.hpp"

using namespace spb;

namespace {

// Independent count of monic irreducibles of degree d over GF(q):
// (1/d) * sum_{k | d} mu(k) q^{d/k}.
long long necklace_count(int q, int d) {
  auto mu = [](int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    }
    if (n > 1) m = -m;
    return m;
  };
  long long total = 0;
  for (int k = 1; k <= d; ++k) {
    if (d % k) continue;
    long long qe = 1;
    for (int i = 0; i < d / k; ++i) qe *= q;
    total += mu(k) * qe;
  }
  return total / d;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  const GF& F = GF::get(5);
  CHECK(F.p() == 5);
  CHECK(F.f() == 1);
  CHECK(F.add(3, 4) == 2);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.neg(2) == 3);
  CHECK(F.inv(3) == 2);
  CHECK(F.pow(2, 4) == 1);
  CHECK(F.frobenius(3) == F.pow(3, 5));
}

TEST_CASE("extension fields have the right structure") {
  for (int q : {4, 8, 9, 16, 25, 27, 49}) {
    const GF& F = GF::get(q);
    CHECK(F.q() == q);
    // Frobenius has order f and fixes exactly p elements.
    int fixed = 0;
    for (int a = 0; a < q; ++a) {
      int b = a;
      for (int i = 0; i < F.f(); ++i) b = F.frobenius(b);
      CHECK(b == a);  // x^(p^f) = x
      if (F.frobenius(a) == a) ++fixed;
    }
    CHECK(fixed == F.p());
    // Multiplicative group: every nonzero element has an inverse.
    for (int a = 1; a < q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  }
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (int q : {2, 3, 4, 5}) {
    const GF& F = GF::get(q);
    auto irr = monic_irreducibles(F, 4);
    std::map<int, long long> byDeg;
    for (const auto& g : irr) byDeg[poly_deg(g)]++;
    for (int d = 1; d <= 4; ++d) CHECK(byDeg[d] == necklace_count(q, d));
  }
}

TEST_CASE("duality is an involution and fixes only X -+ 1 in odd degree") {
  for (int q : {3, 5, 4}) {
    const GF& F = GF::get(q);
    for (const auto& g : monic_irreducibles(F, 3)) {
      if (poly_deg(g) >= 1 && g[0] == 0) continue;  // g = X has no dual
      Poly d = poly_dual(F, g);
      CHECK(poly_is_monic(d));
      CHECK(poly_dual(F, d) == g);
      if (poly_deg(g) % 2 == 1 && d == g) {
        // Self-dual odd degree forces degree 1 and root +-1.
        CHECK(poly_deg(g) == 1);
        int root = F.neg(g[0]);
        CHECK((root == 1 || root == F.neg(1)));
      }
    }
  }
}

TEST_CASE("number theory helpers") {
  CHECK(padic_val(80, 5) == 1);
  CHECK(padic_val(81, 3) == 4);
  CHECK(prime_to_part(80, 5) == 16);
  CHECK(mult_order(3, 13) == 3);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(4, 5) == 2);
  CHECK(ipow_checked(2, 10) == 1024);
  CHECK_THROWS_AS(ipow_checked(10, 40), std::overflow_error);
}

TEST_CASE("ell-prime root filter") {
  const GF& F = GF::get(3);
  // X - 1 always passes.
  CHECK(roots_are_ell_prime(F, poly_x_minus(F, 1), 5));
  // x^4+x^3+x^2+x+1 has roots of order 5 over GF(3): rejected for ell = 5,
  // accepted for ell = 7.
  Poly phi5 = {1, 1, 1, 1, 1};
  CHECK_FALSE(roots_are_ell_prime(F, phi5, 5));
  CHECK(roots_are_ell_prime(F, phi5, 7));
  // x^2+1 has roots of order 4: passes for every odd ell.
  Poly x2p1 = {1, 0, 1};
  CHECK(roots_are_ell_prime(F, x2p1, 3));
  CHECK(roots_are_ell_prime(F, x2p1, 5));
}

TEST_CASE("classification over GF(3) at ell = 5") {
  const GF& F = GF::get(3);
  auto classes = classify_polynomials(F, 5, 4);
  REQUIRE(classes.size() >= 2);
  // X-1 first, X+1 second (q odd).
  CHECK(classes[0].family == Family::F0);
  CHECK(classes[0].gamma == poly_x_minus(F, 1));
  CHECK(classes[1].family == Family::F0);
  CHECK(classes[1].gamma == poly_x_minus(F, F.neg(1)));
  // The remaining classes with total degree <= 4: x^2+1 is self-dual
  // (roots of order 4), and the two order-8 quadratics form one dual pair.
  int nF1 = 0, nF2 = 0;
  for (const auto& c : classes) {
    if (c.family == Family::F1) {
      ++nF1;
      CHECK(c.degree == 2 * c.delta);
      CHECK(c.epsilon == -1);
      CHECK(poly_dual(F, c.gamma) == c.gamma);
    }
    if (c.family == Family::F2) {
      ++nF2;
      CHECK(c.degree == 2 * c.delta);
      CHECK(c.epsilon == +1);
      CHECK(poly_dual(F, c.gamma) == c.gammaDual);
      CHECK(c.gamma < c.gammaDual);
    }
  }
  CHECK(nF1 == 1);
  CHECK(nF2 == 1);
  CHECK(classes.size() == 4);
}

TEST_CASE("classification over GF(2): no X+1 class") {
  const GF& F = GF::get(2);
  auto classes = classify_polynomials(F, 3, 4);
  CHECK(classes[0].gamma == poly_x_minus(F, 1));
  for (std::size_t i = 1; i < classes.size(); ++i) CHECK(classes[i].family != Family::F0);
}

TEST_CASE("classification respects the degree cap and the ell filter") {
  const GF& F = GF::get(3);
  for (int ell : {5, 7, 13}) {
    auto classes = classify_polynomials(F, ell, 6);
    for (const auto& c : classes) {
      CHECK(c.degree <= 6);
      CHECK(roots_are_ell_prime(F, c.gamma, ell));
      if (c.family == Family::F2) CHECK(roots_are_ell_prime(F, c.gammaDual, ell));
    }
    // Classes are unique as sets {gamma, gammaDual}.
    std::set<Poly> seen;
    for (const auto& c : classes) {
      CHECK(!seen.count(c.gamma));
      seen.insert(c.gamma);
      seen.insert(c.gammaDual);
    }
  }
}
