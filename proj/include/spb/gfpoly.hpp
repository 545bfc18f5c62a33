#pragma once
// Finite fields GF(p^f) with fixed defining moduli, dense polynomial
// arithmetic over them, irreducible enumeration, reciprocal duality, and the
// classification of irreducibles into self-dual / dual-pair families after
// discarding polynomials whose roots have order divisible by ell.

#include <cstdint>
#include <string>
#include <vector>

namespace spb {

// Field elements are integers 0..q-1.  For prime q this is the prime field
// itself; for q = p^f the element with digits (c_0,...,c_{f-1}) base p is the
// residue of c_0 + c_1 X + ... modulo the fixed defining polynomial listed in
// gfpoly.cpp.  Fixing the moduli keeps element encodings identical across
// runs, so serialized output is reproducible.
class GF {
 public:
  static const GF& get(int q);  // cached; throws std::invalid_argument if unsupported
  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }
  int add(int a, int b) const { return addt_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const { return mult_[a * q_ + b]; }
  int neg(int a) const { return negt_[a]; }
  int inv(int a) const;  // throws std::invalid_argument on 0
  int pow(int a, long long e) const;
  int frobenius(int a) const { return frob_[a]; }  // a^p
  int one() const { return 1; }

 private:
  GF(int p, int f, const std::vector<int>& modulus);
  int p_, f_, q_;
  std::vector<int> addt_, mult_, negt_, invt_, frob_;
};

// Dense polynomial over a GF: coefficient element indices, lowest degree
// first, no trailing zeros; the zero polynomial is the empty vector.
using Poly = std::vector<int>;

int poly_deg(const Poly& a);  // -1 for the zero polynomial
Poly poly_trim(Poly a);
bool poly_is_monic(const Poly& a);
Poly poly_add(const GF& F, const Poly& a, const Poly& b);
Poly poly_mul(const GF& F, const Poly& a, const Poly& b);
Poly poly_rem(const GF& F, Poly a, const Poly& b);  // b must be nonzero
Poly poly_powmod(const GF& F, Poly base, unsigned long long e, const Poly& mod);
Poly poly_x_minus(const GF& F, int c);  // X - c
std::string poly_to_string(const Poly& a);  // e.g. "x^2+2x+1" (index coefficients)

// All monic irreducibles of degree 1..maxdeg, ordered by degree then by
// coefficient sequence.  Uses trial division by lower-degree irreducibles.
std::vector<Poly> monic_irreducibles(const GF& F, int maxdeg);

// Monic polynomial whose roots are the inverses of the roots of `a`;
// requires a(0) != 0.
Poly poly_dual(const GF& F, const Poly& a);

// Number-theory helpers.
int padic_val(long long n, int p);             // v_p(n); n must be nonzero
long long prime_to_part(long long n, int p);   // n / p^{v_p(n)}
long long mult_order(long long x, long long mod);  // order of x in (Z/mod)^*
unsigned long long ipow_checked(unsigned long long b, int e);  // throws on overflow

// True iff every root of the irreducible `a` of degree d has multiplicative
// order prime to ell: equivalent to X^{(q^d - 1) / ell-part} = 1 modulo a.
bool roots_are_ell_prime(const GF& F, const Poly& a, int ell);

enum class Family { F0, F1, F2 };

// One duality orbit of monic irreducibles with nonzero constant term and
// roots of order prime to ell:
//  * F0: X-1 and, in odd characteristic, X+1 (each a class of its own)
//  * F1: self-dual irreducible of even degree 2*delta, epsilon = -1
//  * F2: dual pair {gamma, gamma*}, both of degree delta, epsilon = +1
// `degree` is the total degree of the class: the dimension one unit of
// multiplicity consumes (1 / 2*delta / 2*delta respectively).
struct PolyClass {
  Family family;
  Poly gamma;      // canonical member (the lex-least of a dual pair)
  Poly gammaDual;  // == gamma except for dual pairs
  int degree;
  int delta;
  int epsilon;  // -1 for F1, +1 for F2, 0 (unused) for F0
  bool operator==(const PolyClass&) const = default;
};

// All classes of total degree <= maxdeg: X-1 first, then X+1 when q is odd,
// then the rest ordered by (degree, gamma).
std::vector<PolyClass> classify_polynomials(const GF& F, int ell, int maxdeg);

}  // namespace spb
