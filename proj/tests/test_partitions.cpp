// Partition / abacus calculus: frozen convention examples, counting
// identities, and cross-checks against the rim-strip oracle.

#include "doctest.h"
#include "oracles.hpp"
#include "spb/partition.hpp"

using namespace spb;

TEST_CASE("beta sets round-trip") {
  CHECK(beta_set({}, 0) == BetaSet{});
  CHECK(beta_set({}, 3) == BetaSet{0, 1, 2});
  CHECK(beta_set({4, 2}, 2) == BetaSet{2, 5});
  CHECK(beta_set({4, 2}, 3) == BetaSet{0, 3, 6});
  CHECK(partition_from_beta({0, 3, 6}) == Partition{4, 2});
  CHECK(partition_from_beta({2, 5}) == Partition{4, 2});
  CHECK(partition_from_beta({0, 1, 2}) == Partition{});
}

TEST_CASE("quotient and compose conventions are the fixed ones") {
  // The slot of a bead at position x is (x - beads) mod e, so these four
  // values pin the labelling down completely.
  CHECK(e_quotient({3}, 2) == std::vector<Partition>{{1}, {}});
  CHECK(e_quotient({1, 1, 1}, 2) == std::vector<Partition>{{}, {1}});
  CHECK(compose({}, {{}, {1}}, 2) == Partition{2});
  CHECK(compose({}, {{1}, {}}, 2) == Partition{1, 1});

  CHECK(e_core({3}, 2) == Partition{1});
  CHECK(e_core({4, 2}, 3) == Partition{4, 2});  // (4,2) has no rim 3-strip
  CHECK(e_weight({3}, 2) == 1);
  CHECK(is_e_core({4, 2}, 3));
  CHECK_FALSE(is_e_core({3}, 2));
}

TEST_CASE("compose rejects bad input") {
  CHECK_THROWS_AS(compose({3}, {{1}, {}}, 2), std::invalid_argument);  // (3) is not a 2-core
  CHECK_THROWS_AS(compose({}, {{1}}, 2), std::invalid_argument);       // wrong tuple length
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_partitions(0).size() == 1);
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(10).size() == 42);
  CHECK(enumerate_tuples(0, 3).size() == 1);
  CHECK(enumerate_tuples(2, 2).size() == 5);  // p(0)p(2)+p(1)p(1)+p(2)p(0)

  CHECK(enumerate_with_core({}, 2, 1) == std::vector<Partition>{{1, 1}, {2}});
  CHECK(enumerate_with_core({}, 2, 2).size() == 5);  // all partitions of 4 have empty 2-core
}

TEST_CASE("string round-trip") {
  CHECK(partition_to_string({}) == "[]");
  CHECK(partition_to_string({4, 2}) == "[4,2]");
  CHECK(partition_from_string("[4,2]") == Partition{4, 2});
  CHECK(partition_from_string("[]") == Partition{});
}

TEST_CASE("core, weight, and round-trip agree with the rim-strip oracle") {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& la : enumerate_partitions(n)) {
      for (int e = 1; e <= 4; ++e) {
        auto terminals = oracle::strip_cores(la, e);
        REQUIRE(terminals.size() == 1);  // the core is order-independent
        const Partition& core = *terminals.begin();
        CHECK(e_core(la, e) == core);
        CHECK(e_weight(la, e) == (n - static_cast<int>(partition_sum(core))) / e);
        auto quot = e_quotient(la, e);
        REQUIRE(static_cast<int>(quot.size()) == e);
        long long total = 0;
        for (const auto& p : quot) total += partition_sum(p);
        CHECK(static_cast<long long>(e) * total == n - partition_sum(core));
        CHECK(compose(core, quot, e) == la);
      }
    }
  }
}

TEST_CASE("partitions with a given core match the oracle filter") {
  std::vector<Partition> cores = {{}, {1}, {2, 1}};
  for (const auto& kappa : cores) {
    for (int e = 2; e <= 4; ++e) {
      if (!is_e_core(kappa, e)) continue;
      for (int w = 0; w <= 3; ++w) {
        auto listed = enumerate_with_core(kappa, e, w);
        std::vector<Partition> brute;
        int n = static_cast<int>(partition_sum(kappa)) + e * w;
        for (const auto& la : enumerate_partitions(n)) {
          auto terminals = oracle::strip_cores(la, e);
          REQUIRE(terminals.size() == 1);
          if (*terminals.begin() == kappa) brute.push_back(la);
        }
        std::sort(brute.begin(), brute.end());
        std::vector<Partition> sorted = listed;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == brute);
        // The count depends only on (e, w): it is the number of e-tuples.
        CHECK(listed.size() == enumerate_tuples(w, e).size());
      }
    }
  }
}

TEST_CASE("quotient is slot-stable under bead padding") {
  // The slot label (x - beads) mod e makes the per-slot partitions
  // independent of how many beads represent the partition, as long as the
  // count moves by multiples of e.  This invariance is what lets symbols
  // (whose rows are never padded to a normal form) share the calculus.
  for (int n = 0; n <= 10; ++n) {
    for (const auto& la : enumerate_partitions(n)) {
      for (int e = 1; e <= 4; ++e) {
        auto q = e_quotient(la, e);
        int base = static_cast<int>(la.size());
        int beads = ((base + e - 1) / e) * e;  // least multiple of e >= #parts
        for (int pad = 1; pad <= 2; ++pad) {
          auto levels = runner_levels(beta_set(la, beads + pad * e), e);
          REQUIRE(static_cast<int>(levels.size()) == e);
          for (int j = 0; j < e; ++j) CHECK(partition_from_beta(levels[j]) == q[j]);
        }
      }
    }
  }
}
