#pragma once
// Context for one verification point (group kind, n, q, ell): the field, the
// duality classes of eligible polynomials, per-class torsion parameters, and
// the enumeration of semisimple labels of order prime to ell.
//
// A semisimple label is a multiplicity function m on the polynomial classes
// with sum of m * degree equal to 2n+1, where the class of X-1 has odd
// multiplicity (at least 1) and the class of X+1, when present, has even
// multiplicity.  Unit multiplicity of a dual pair covers both members.

#include <string>
#include <vector>

#include "spb/gfpoly.hpp"
#include "spb/symbol.hpp"

namespace spb {

enum class GroupKind { Sp, SOodd, CSp };

std::string kind_to_string(GroupKind k);
GroupKind kind_from_string(const std::string& s);

// e = order of q^2 modulo ell; eps = +1 when ell divides q^e - 1 (linear
// regime) and -1 when ell divides q^e + 1 (unitary regime; q odd prime to
// ell makes the two exclusive); a = v_ell(q^{2e} - 1).
struct EllParams {
  int e;
  int a;
  int eps;
};
EllParams ell_params(int q, int ell);

struct SsContext {
  GroupKind kind;
  int n = 0;
  int q = 0;
  int ell = 0;
  EllParams params{};
  const GF* gf = nullptr;
  HookKind f0mode = HookKind::Hook;  // hook in the linear regime, cohook in the unitary
  std::vector<PolyClass> classes;
  std::vector<int> egamma;  // per class: e for F0, order of eps*q^delta mod ell otherwise
  std::vector<int> beta;    // per class: 2 for F0, 1 otherwise
  int idxXminus1 = -1;
  int idxXplus1 = -1;          // -1 in even characteristic
  long long centerFull = 0;    // (q-1) with its ell-part removed
};

// Validates the point and builds the context.  Label enumeration is
// implemented for CSp in odd characteristic and Sp in even characteristic;
// other kind/characteristic combinations are rejected here.
SsContext make_context(GroupKind kind, int n, int q, int ell);

struct SemisimpleLabel {
  // (class index, multiplicity), sorted by class index, multiplicities >= 1.
  std::vector<std::pair<int, int>> mults;
  bool operator==(const SemisimpleLabel&) const = default;
  bool operator<(const SemisimpleLabel& o) const { return mults < o.mults; }
};

int ss_mult(const SemisimpleLabel& s, int classIdx);  // 0 when absent

// All semisimple labels for the context, sorted.
std::vector<SemisimpleLabel> enumerate_semisimple(const SsContext& ctx);

// The permutation the coefficient Frobenius x -> x^p induces on class
// indices (identity for prime q).
std::vector<int> frobenius_class_permutation(const SsContext& ctx);

SemisimpleLabel apply_class_permutation(const SemisimpleLabel& s, const std::vector<int>& perm);

}  // namespace spb
