// End-to-end verification reports: group orders, the Sylow-order identity,
// full-point reports with their check flags, worker-count determinism, the
// time-budget partial path, and the action compatibility battery.

#include <string>

#include "doctest.h"
#include "spb/serialize.hpp"
#include "spb/verify.hpp"

using namespace spb;

TEST_CASE("group orders") {
  CHECK(group_order_decimal(GroupKind::Sp, 2, 3) == "51840");
  CHECK(group_order_decimal(GroupKind::CSp, 2, 3) == "103680");
  CHECK(group_order_decimal(GroupKind::SOodd, 2, 3) == "51840");
  CHECK(group_order_decimal(GroupKind::Sp, 2, 2) == "720");
  // 51840 = 2^7 * 3^4 * 5.
  CHECK(group_order_ell_exponent(GroupKind::Sp, 2, 3, 5) == 1);
  CHECK(group_order_ell_exponent(GroupKind::Sp, 2, 3, 7) == 0);
  CHECK(group_order_ell_exponent(GroupKind::CSp, 2, 3, 5) == 1);
}

TEST_CASE("status names") {
  CHECK(status_to_string(CheckStatus::Ok) == "ok");
  CHECK(status_to_string(CheckStatus::CountMismatch) == "count-mismatch");
  CHECK(status_to_string(CheckStatus::NonInjective) == "non-injective");
  CHECK(status_to_string(CheckStatus::Partial) == "partial");
}

TEST_CASE("Sylow identity at a hand-checked point") {
  // Sp_4(3), ell = 5: e = 2, a = 1, w = floor(n/e) = 1.  All three exponent
  // computations give 1 and the center contributes nothing.
  SylowReport r = sylow_check(GroupKind::Sp, 2, 3, 5);
  CHECK(r.e == 2);
  CHECK(r.a == 1);
  CHECK(r.w == 1);
  CHECK(r.towerExp == 1);
  CHECK(r.factorExp == 1);
  CHECK(r.countExp == 1);
  CHECK(r.centerExp == 0);
  CHECK(r.orderExp == 1);
  CHECK(r.ok);

  // CSp_4(7), ell = 3: the center q - 1 = 6 contributes one factor of 3.
  SylowReport c = sylow_check(GroupKind::CSp, 2, 7, 3);
  CHECK(c.centerExp == 1);
  CHECK(c.orderExp == c.factorExp + 1);
  CHECK(c.ok);
}

TEST_CASE("Sylow identity across a grid") {
  for (int n = 2; n <= 4; ++n) {
    for (int q : {2, 3, 4, 5, 7}) {
      for (int ell : {3, 5, 7, 13}) {
        if (q % ell == 0) continue;
        for (GroupKind kind : {GroupKind::Sp, GroupKind::CSp, GroupKind::SOodd}) {
          CAPTURE(kind_to_string(kind));
          CAPTURE(n);
          CAPTURE(q);
          CAPTURE(ell);
          CHECK(sylow_check(kind, n, q, ell).ok);
        }
      }
    }
  }
}

TEST_CASE("full report for CSp_4(3) at ell = 5") {
  GroupReport r = verify_group(GroupKind::CSp, 2, 3, 5);
  CHECK(r.nClasses == 4);
  CHECK(r.nSemisimple == 7);
  CHECK(r.sections.size() == 7);
  CHECK(r.totalIbr == r.totalWeights);
  CHECK(r.totalIbr == r.directTotal);
  CHECK(r.countsOk);
  CHECK(r.bijectionOk);
  CHECK(r.partitionOk);
  CHECK(r.kformOk);
  CHECK(r.sylowOk);
  CHECK_FALSE(r.partial);
  CHECK(r.overall() == CheckStatus::Ok);
  long long blocks = 0;
  for (const SsReport& sec : r.sections) {
    CHECK(sec.direct == sec.viaBlocks);
    blocks += static_cast<long long>(sec.blocks.size());
    for (const BlockReport& b : sec.blocks) {
      CHECK(b.status == CheckStatus::Ok);
      CHECK(b.kformOk);
      CHECK(b.nIbr == b.nWeights);
    }
  }
  CHECK(blocks == r.nBlocks);
}

TEST_CASE("reports pass in even characteristic") {
  CHECK(verify_group(GroupKind::Sp, 2, 2, 3).overall() == CheckStatus::Ok);
  CHECK(verify_group(GroupKind::Sp, 2, 4, 3).overall() == CheckStatus::Ok);
}

TEST_CASE("worker count does not change the report") {
  GroupReport serial = verify_group(GroupKind::CSp, 2, 3, 7, 1);
  GroupReport pooled = verify_group(GroupKind::CSp, 2, 3, 7, 4);
  CHECK(render_json(json_group_report(serial, true)) ==
        render_json(json_group_report(pooled, true)));
}

TEST_CASE("an exhausted time budget is reported as partial, never as failure") {
  GroupReport r = verify_group(GroupKind::CSp, 3, 3, 5, 1, 1e-9);
  CHECK(r.partial);
  CHECK(r.overall() == CheckStatus::Partial);
}

TEST_CASE("center and field actions commute with the bijection") {
  ActionReport a = check_actions(make_context(GroupKind::CSp, 2, 3, 5));
  CHECK(a.centerOk);
  CHECK(a.orbitsOk);
  CHECK(a.fieldOk);
  CHECK(a.ok());
  CHECK(a.blocksChecked > 0);
  CHECK(a.labelsChecked > 0);

  // GF(4) exercises a genuinely non-trivial coefficient Frobenius.
  CHECK(check_actions(make_context(GroupKind::Sp, 2, 4, 3)).ok());
}
