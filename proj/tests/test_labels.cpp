// Block, irreducible-Brauer, and weight labels: a fully worked small-rank
// example, exact count identities against direct enumeration, the per-block
// bijection, multiplicity-one tower counts, and the center and field actions.

#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "spb/labels.hpp"

using namespace spb;

namespace {

SemisimpleLabel make_ss(std::vector<std::pair<int, int>> m) {
  SemisimpleLabel s;
  s.mults = std::move(m);
  return s;
}

long long tuple_count(int total, int slots) {
  return static_cast<long long>(enumerate_tuples(total, slots).size());
}

}  // namespace

TEST_CASE("worked example: CSp_4(3) at ell = 5, label (x-1)(x+1)^4") {
  // e = 2, unitary regime, so unit-class symbols reduce by cohooks.  The
  // x+1 part has rank 2 and even defect: five symbols, of which [[0],[2]]
  // and [[0,1],[1,2]] are their own cocores (case II), the degenerate
  // [[1],[1]] is its own cocore and splits into two block copies (case
  // III), and the remaining two share the empty cocore of weight 1 (case
  // IV).  The x-1 part has rank 0 throughout.
  SsContext ctx = make_context(GroupKind::CSp, 2, 3, 5);
  SemisimpleLabel s = make_ss({{0, 1}, {1, 4}});

  std::vector<BlockLabel> blocks = enumerate_blocks_for(ctx, s);
  REQUIRE(blocks.size() == 5);
  std::map<CaseTag, int> tags;
  for (const BlockLabel& b : blocks) ++tags[b.tag];
  CHECK(tags[CaseTag::II] == 2);
  CHECK(tags[CaseTag::III] == 2);
  CHECK(tags[CaseTag::IV] == 1);

  std::set<std::string> coreII;
  std::set<int> copiesIII;
  for (const BlockLabel& b : blocks) {
    CHECK(b.centerRange == 1);  // (q - 1) halved by the even x+1 multiplicity
    REQUIRE(b.cores.size() == 2);
    CHECK(b.cores[0].classIdx == ctx.idxXminus1);
    CHECK(b.cores[0].weight == 0);
    // odd multiplicity 1: rank 0 with odd defect
    CHECK(symbol_to_string(b.cores[0].coreSym) == "[[],[0]]");
    const CoreComponent& c = b.cores[1];
    CHECK(c.classIdx == ctx.idxXplus1);
    if (b.tag == CaseTag::II) {
      CHECK(c.weight == 0);
      coreII.insert(symbol_to_string(c.coreSym));
      CHECK(block_variant(b) == "single");
      CHECK(count_ibr(ctx, b) == 1);
      CHECK(count_weights(ctx, b) == 1);
    } else if (b.tag == CaseTag::III) {
      CHECK(c.weight == 0);
      CHECK(symbol_to_string(c.coreSym) == "[[1],[1]]");
      copiesIII.insert(b.copy);
      CHECK(block_variant(b) == (b.copy == 0 ? "copy0" : "copy1"));
      CHECK(count_ibr(ctx, b) == 1);
      CHECK(count_weights(ctx, b) == 1);
    } else {
      CHECK(c.weight == 1);
      CHECK(is_empty_symbol(c.coreSym));
      CHECK(block_variant(b) == "single");
      // Four ordered weight-1 quotient tuples on 2e = 4 runners, glued in
      // swap pairs onto the degenerate empty cocore: two labels.
      CHECK(count_ibr(ctx, b) == 2);
      CHECK(count_weights(ctx, b) == 2);
    }
  }
  CHECK(coreII == std::set<std::string>{"[[0],[2]]", "[[0,1],[1,2]]"});
  CHECK(copiesIII == std::set<int>{0, 1});

  long long total = 0;
  for (const BlockLabel& b : blocks) total += count_ibr(ctx, b);
  CHECK(total == 6);
  CHECK(direct_label_count(ctx, s) == 6);
}

TEST_CASE("worked example: the weight-1 block pairs swapped quotients") {
  SsContext ctx = make_context(GroupKind::CSp, 2, 3, 5);
  std::vector<BlockLabel> blocks = enumerate_blocks_for(ctx, make_ss({{0, 1}, {1, 4}}));
  auto it = std::find_if(blocks.begin(), blocks.end(),
                         [](const BlockLabel& b) { return b.tag == CaseTag::IV; });
  REQUIRE(it != blocks.end());
  const BlockLabel& b = *it;

  std::vector<IBrLabel> chis = enumerate_ibr(ctx, b);
  REQUIRE(chis.size() == 2);
  std::set<std::string> syms;
  for (const IBrLabel& chi : chis) {
    REQUIRE(chi.comps.size() == 2);
    CHECK_FALSE(chi.comps[1].copy.has_value());  // non-degenerate symbols
    syms.insert(symbol_to_string(chi.comps[1].sym));
  }
  CHECK(syms == std::set<std::string>{"[[],[0,2]]", "[[0,1,2],[1]]"});

  std::set<WeightLabel> images;
  for (const IBrLabel& chi : chis) {
    WeightLabel w = bijection_image(ctx, b, chi);
    REQUIRE(w.comps.size() == 2);
    // x-1 part: empty quotient tuple on 2e = 4 runners.
    CHECK(w.comps[0].form == WeightForm::Plain);
    CHECK(w.comps[0].tuple == std::vector<Partition>(4));
    // x+1 part: the two ordered quotients of the symbol are swapped mates,
    // recorded by their lex-least representative.
    CHECK(w.comps[1].form == WeightForm::Pair);
    CHECK(w.comps[1].tuple.size() == 4);
    int tot = 0;
    for (const Partition& p : w.comps[1].tuple) tot += static_cast<int>(partition_sum(p));
    CHECK(tot == 1);
    CHECK(w.comps[1].tuple <= swap_halves(w.comps[1].tuple));
    images.insert(w);
  }
  CHECK(images.size() == 2);

  // The degenerate-core copies map to the symmetric empty quotient.
  for (const BlockLabel& bb : blocks) {
    if (bb.tag != CaseTag::III) continue;
    std::vector<IBrLabel> one = enumerate_ibr(ctx, bb);
    REQUIRE(one.size() == 1);
    CHECK(one[0].comps[1].copy == bb.copy);
    WeightLabel w = bijection_image(ctx, bb, one[0]);
    CHECK(w.comps[1].form == WeightForm::Plain);
    CHECK(w.comps[1].tuple == std::vector<Partition>(4));
    CHECK(enumerate_weights(ctx, bb) == std::vector<WeightLabel>{w});
  }
}

TEST_CASE("direct count for the unipotent-type label") {
  // (x-1)^5 alone: rank-2 symbols of odd defect, six of them.
  SsContext ctx = make_context(GroupKind::CSp, 2, 3, 5);
  SemisimpleLabel s = make_ss({{0, 5}});
  CHECK(direct_label_count(ctx, s) == 6);
  long long total = 0;
  for (const BlockLabel& b : enumerate_blocks_for(ctx, s)) total += count_ibr(ctx, b);
  CHECK(total == 6);
}

TEST_CASE("counts and bijection hold block by block") {
  struct Pt {
    GroupKind kind;
    int n, q, ell;
  };
  const Pt pts[] = {
      {GroupKind::CSp, 2, 3, 5},
      {GroupKind::CSp, 2, 5, 3},
      {GroupKind::Sp, 2, 2, 3},
      {GroupKind::Sp, 2, 4, 3},
  };
  for (const Pt& pt : pts) {
    CAPTURE(kind_to_string(pt.kind));
    CAPTURE(pt.q);
    CAPTURE(pt.ell);
    SsContext ctx = make_context(pt.kind, pt.n, pt.q, pt.ell);
    for (const SemisimpleLabel& s : enumerate_semisimple(ctx)) {
      long long viaBlocks = 0;
      for (const BlockLabel& b : enumerate_blocks_for(ctx, s)) {
        std::vector<IBrLabel> chis = enumerate_ibr(ctx, b);
        std::vector<WeightLabel> ws = enumerate_weights(ctx, b);
        CHECK(std::is_sorted(chis.begin(), chis.end()));
        CHECK(std::is_sorted(ws.begin(), ws.end()));
        CHECK(static_cast<long long>(chis.size()) == count_ibr(ctx, b));
        CHECK(static_cast<long long>(ws.size()) == count_weights(ctx, b));
        std::set<WeightLabel> wset(ws.begin(), ws.end());
        REQUIRE(wset.size() == ws.size());
        std::set<WeightLabel> images;
        for (const IBrLabel& chi : chis) {
          WeightLabel w = bijection_image(ctx, b, chi);
          CHECK(wset.count(w) == 1);
          images.insert(w);
        }
        CHECK(images.size() == chis.size());  // injective
        CHECK(images.size() == wset.size());  // onto
        viaBlocks += static_cast<long long>(chis.size());
      }
      CHECK(viaBlocks == direct_label_count(ctx, s));
    }
  }
}

TEST_CASE("tower counts match quotient-tuple counts") {
  CHECK(kform_component_count(3, 1, 3) == 3);  // the partitions of 3
  CHECK(kform_component_count(3, 1, 3) ==
        static_cast<long long>(enumerate_partitions(3).size()));
  CHECK(kform_paired_count(3, 1, 2) == 4);

  // The product identity P(x) = prod_d C(x^{l^d})^{l^d} over the core
  // generating function makes the tower count agree with the plain count of
  // quotient tuples, slot by slot.
  for (int ell : {3, 5}) {
    for (int base = 1; base <= 4; ++base) {
      for (int w = 0; w <= 4; ++w) {
        CAPTURE(ell);
        CAPTURE(base);
        CAPTURE(w);
        CHECK(kform_component_count(ell, base, w) == tuple_count(w, base));
      }
    }
  }
  for (int ell : {3, 5}) {
    for (int e = 1; e <= 2; ++e) {
      for (int w = 0; w <= 4; ++w) {
        CAPTURE(ell);
        CAPTURE(e);
        CAPTURE(w);
        long long N = tuple_count(w, 2 * e);
        long long S = (w % 2 == 0) ? tuple_count(w / 2, e) : 0;
        CHECK(kform_paired_count(ell, e, w) == (N - S) / 2 + 2 * S);
      }
    }
  }
}

TEST_CASE("center action: orbit lengths and the wrap twist") {
  SsContext ctx = make_context(GroupKind::CSp, 2, 3, 5);
  for (const BlockLabel& b : enumerate_blocks(ctx)) {
    long long expect = b.centerRange * (b.tag == CaseTag::III ? 2 : 1);
    CHECK(center_block_orbit(ctx, b) == expect);
    if (b.tag == CaseTag::III) {
      BlockLabel c = act_center_block(ctx, b);
      CHECK(c.copy == 1 - b.copy);
      CHECK(c.i == 0);  // centerRange is 1 here, so every step wraps
      CHECK(act_center_block(ctx, c) == b);
    }
    for (const IBrLabel& chi : enumerate_ibr(ctx, b)) {
      bool flips = b.tag == CaseTag::III;
      for (const IBrComponent& comp : chi.comps)
        if (comp.copy.has_value()) flips = true;
      LabeledIBr x{b, chi};
      CHECK(center_ibr_orbit(ctx, x) == b.centerRange * (flips ? 2 : 1));
      WeightLabel w = bijection_image(ctx, b, chi);
      CHECK(center_weight_orbit(ctx, {b, w}) == b.centerRange * (flips ? 2 : 1));
    }
  }

  // Without an x+1 part the center character runs over the full prime-to-ell
  // part of q - 1.
  SsContext ctx5 = make_context(GroupKind::CSp, 2, 5, 3);
  CHECK(ctx5.centerFull == 4);
  SemisimpleLabel uni = make_ss({{0, 5}});
  for (const BlockLabel& b : enumerate_blocks_for(ctx5, uni)) {
    CHECK(b.tag == CaseTag::I);
    CHECK(b.centerRange == 4);
    CHECK(center_block_orbit(ctx5, b) == 4);
    BlockLabel c = b;
    for (int t = 0; t < 4; ++t) {
      CHECK(c.i == t);
      c = act_center_block(ctx5, c);
    }
    CHECK(c == b);
  }
}

TEST_CASE("field action: identity over prime fields, involution over GF(4)") {
  SsContext ctx = make_context(GroupKind::CSp, 2, 3, 5);
  for (const BlockLabel& b : enumerate_blocks(ctx)) CHECK(act_field_block(ctx, b, 1) == b);

  SsContext ctx4 = make_context(GroupKind::Sp, 2, 4, 3);
  std::vector<BlockLabel> blocks = enumerate_blocks(ctx4);
  std::set<BlockLabel> index(blocks.begin(), blocks.end());
  bool moved = false;
  for (const BlockLabel& b : blocks) {
    BlockLabel c = act_field_block(ctx4, b, 1);
    CHECK(index.count(c) == 1);
    CHECK(act_field_block(ctx4, c, 1) == b);
    if (!(c == b)) moved = true;
  }
  CHECK(moved);
}
