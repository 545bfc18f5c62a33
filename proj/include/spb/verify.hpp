// Whole-group verification: per-block label counting and bijection checks,
// the independent direct count of labels, tower-form weight counts, Sylow
// order bookkeeping, and the action compatibility checks.
//
// verify_group() runs the full battery for one (kind, n, q, ell) point:
//   * enumerate every semisimple label, every block under it, and every
//     irreducible-Brauer and weight label in each block;
//   * check |IBr(B)| == |W(B)| for every block B;
//   * check the componentwise quotient map is a bijection IBr(B) -> W(B);
//   * check that blocks partition the labels: the sum of |IBr(B)| over the
//     blocks of one semisimple label equals the direct product-formula count
//     for that label, computed without ever constructing blocks;
//   * recount weights per block in tower form (ell-cores on slot families
//     scaled by powers of ell) and compare with the quotient-tuple count;
//   * check the Sylow ell-exponent identities for the ambient group.
//
// Statuses are: "ok", "count-mismatch", "non-injective", "partial" (the last
// only when a time budget interrupted the run).

#pragma once

#include <string>
#include <vector>

#include "spb/labels.hpp"

namespace spb {

enum class CheckStatus { Ok, CountMismatch, NonInjective, Partial };
std::string status_to_string(CheckStatus s);

struct BlockReport {
  BlockLabel block;
  long long nIbr = 0;
  long long nWeights = 0;
  long long kform = 0;  // tower-form weight count (independent recursion)
  bool kformOk = false;
  CheckStatus status = CheckStatus::Ok;  // bijection status for this block
};

// All blocks under one semisimple label, plus the direct count they must sum to.
struct SsReport {
  SemisimpleLabel s;
  long long direct = 0;     // product-formula label count, no blocks involved
  long long viaBlocks = 0;  // sum of |IBr(B)| over the blocks below
  std::vector<BlockReport> blocks;
};

struct GroupReport {
  GroupKind kind = GroupKind::Sp;
  int n = 0, q = 0, ell = 0;
  EllParams params;
  long long nClasses = 0;
  long long nSemisimple = 0;
  long long nBlocks = 0;
  long long totalIbr = 0;
  long long totalWeights = 0;
  long long directTotal = 0;
  bool countsOk = false;     // every block: |IBr| == |W|
  bool bijectionOk = false;  // every block: quotient map is a bijection
  bool partitionOk = false;  // every semisimple label: sum over blocks == direct
  bool kformOk = false;      // every block: tower recount agrees
  bool sylowOk = false;
  bool partial = false;  // a time budget cut the run short
  std::vector<SsReport> sections;
  CheckStatus overall() const;
};

// jobs <= 1 runs serially; otherwise semisimple sections are processed by a
// small thread pool (results are merged in enumeration order, so the report
// is identical either way).  timeBudgetSec > 0 aborts cleanly when exceeded
// and marks the report partial.
GroupReport verify_group(GroupKind kind, int n, int q, int ell, int jobs = 1,
                         double timeBudgetSec = 0.0);

// Sylow ell-exponent of the group order, computed three independent ways:
//   towerExp : base-ell digits c_k of w = floor(n/e), each digit contributing
//              c_k * (a*ell^k + (ell^k - 1)/(ell - 1))  (wreath tower orders);
//   factorExp: sum over i <= n of v_ell(q^{2i} - 1), each factor evaluated
//              directly in 128-bit arithmetic;
//   countExp : a*w + v_ell(w!).
// centerExp is the extra v_ell(q - 1) carried by the conformal group's
// center; orderExp is v_ell of the full group order.  ok requires all three
// exponents equal and orderExp == factorExp + centerExp.
struct SylowReport {
  GroupKind kind = GroupKind::Sp;
  int n = 0, q = 0, ell = 0;
  int e = 0, a = 0;
  long long w = 0;
  long long towerExp = 0;
  long long factorExp = 0;
  long long countExp = 0;
  long long centerExp = 0;
  long long orderExp = 0;
  bool ok = false;
};
SylowReport sylow_check(GroupKind kind, int n, int q, int ell);

// Center and field-automorphism compatibility over every block and label of
// the context: the quotient map commutes with both actions, and center orbit
// sizes agree with the centerRange-times-flip prediction on both sides.
struct ActionReport {
  long long blocksChecked = 0;
  long long labelsChecked = 0;
  bool centerOk = false;
  bool orbitsOk = false;
  bool fieldOk = false;
  bool ok() const { return centerOk && orbitsOk && fieldOk; }
};
ActionReport check_actions(const SsContext& ctx);

// |G| for G in {Sp_2n(q), SO_{2n+1}(q), CSp_2n(q)} as a decimal string
// (internally 128-bit; throws std::overflow_error when the order exceeds it).
std::string group_order_decimal(GroupKind kind, int n, int q);
// v_ell of that order.
long long group_order_ell_exponent(GroupKind kind, int n, int q, int ell);

}  // namespace spb
