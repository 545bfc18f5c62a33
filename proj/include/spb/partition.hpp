#pragma once
// Partition and abacus (beta-set) calculus: e-cores, e-quotients, hook-wise
// composition and enumeration.
//
// Conventions, fixed once and used by every caller:
//  * A partition is a weakly decreasing vector of positive ints; {} is empty.
//  * The beta-set of lambda with b beads (b >= #parts) is
//    { lambda_i + b - i : 1 <= i <= b }, lambda padded with zeros; stored
//    strictly increasing.
//  * Quotients normalize the bead count to the least multiple of e that is
//    >= #parts; runner i then collects the beads with position == i (mod e),
//    and the quotient tuple is ordered by runner index 0..e-1.  Equivalently,
//    a bead at position x lands in slot (x - b) mod e where b is the bead
//    count.  That form is stable under adding beads and is shared with the
//    symbol calculus, where row sizes are not normalized.

#include <string>
#include <vector>

namespace spb {

using Partition = std::vector<int>;
using BetaSet = std::vector<int>;  // strictly increasing, non-negative

bool is_partition(const Partition& la);
long long partition_sum(const Partition& la);

// Beta-set with a prescribed number of beads (>= #parts); ascending.
BetaSet beta_set(const Partition& la, int beads);
Partition partition_from_beta(BetaSet beta);

// Slot-labelled runner decomposition of a beta-set: slot j holds the levels
// floor(x/e) of the beads on the runner with absolute residue (j + |X|) mod e.
std::vector<BetaSet> runner_levels(const BetaSet& X, int e);

Partition e_core(const Partition& la, int e);
std::vector<Partition> e_quotient(const Partition& la, int e);
bool is_e_core(const Partition& la, int e);
int e_weight(const Partition& la, int e);

// Inverse of (e_core, e_quotient); rejects a core that is not an e-core or a
// quotient tuple of the wrong length.
Partition compose(const Partition& core, const std::vector<Partition>& quot, int e);

// All partitions of n, ascending lexicographic on the part vectors.
std::vector<Partition> enumerate_partitions(int n);

// All ordered tuples of `slots` partitions with total size `total`.
std::vector<std::vector<Partition>> enumerate_tuples(int total, int slots);

// All partitions with the given e-core and e-weight, sorted.
std::vector<Partition> enumerate_with_core(const Partition& core, int e, int w);

std::string partition_to_string(const Partition& la);  // "[4,2]", "[]"
Partition partition_from_string(const std::string& s);

}  // namespace spb
