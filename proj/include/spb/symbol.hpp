#pragma once
// Symbol calculus: reduced two-row symbols with rank/defect, e-hook and
// e-cohook cores, quotients, and composition.
//
// A symbol is an unordered pair of strictly increasing rows of non-negative
// ints, modulo the shift (S,T) ~ ({0} u (S+1), {0} u (T+1)).  The stored form
// is reduced (not both rows contain 0) with the lexicographically smaller row
// first; reduced pairs are unique in their shift class.
//
//  * rank   = sum(rows) - floor((|A|+|B|-1)^2 / 4)
//  * defect = | |A| - |B| |
//  * degenerate iff the rows coincide
//
// Hook mode moves a bead x to x-e inside its own row; per row this is one
// step down a runner of the row's own e-runner abacus, with the shift-stable
// slot labelling (residue - row size) mod e shared with the partition module.
//
// Cohook mode moves a bead x in one row to x-e in the other row.  Writing a
// bead as (row r, level k = floor(x/e), residue i = x mod e), the slots with
// fixed i split into two alternating chains chi = (k + r) mod 2, and a cohook
// is one step down a chain.  Chains get the shift-stable label
// J = (i + e*chi - floor(N/2)) mod 2e (N = total bead count); swapping the
// rows maps J to J+e, so the quotient's two e-blocks swap, matching the
// block-reversal rule for ordered quotients.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spb/partition.hpp"

namespace spb {

enum class HookKind { Hook, Cohook };
enum class DefectParity { Even, Odd };

struct Symbol {
  std::array<BetaSet, 2> rows;  // reduced, rows[0] <= rows[1] lexicographically
  bool operator==(const Symbol&) const = default;
  bool operator<(const Symbol& o) const { return rows < o.rows; }
};

// Canonicalizes an arbitrary representative (validates rows, reduces, orders).
Symbol make_symbol(BetaSet a, BetaSet b);

// Non-canonical representative shifted t times (for invariance tests).
std::array<BetaSet, 2> shifted_rows(const Symbol& s, int t);

int rank(const Symbol& s);
int defect(const Symbol& s);
bool is_degenerate(const Symbol& s);
bool is_empty_symbol(const Symbol& s);

Symbol symbol_core(const Symbol& la, int e, HookKind mode);
int symbol_weight(const Symbol& la, int e, HookKind mode);  // (rank - rank(core))/e

// Unordered pair of e-tuples of partitions.
struct SymbolQuotient {
  std::array<std::vector<Partition>, 2> halves;  // halves[0] <= halves[1]
  bool degenerate() const { return halves[0] == halves[1]; }
  bool operator==(const SymbolQuotient&) const = default;
};
// Ordered 2e-tuple (first half, second half).
using OrderedQuotient = std::vector<Partition>;

SymbolQuotient make_symbol_quotient(std::vector<Partition> first,
                                    std::vector<Partition> second);
SymbolQuotient symbol_quotient(const Symbol& la, int e, HookKind mode);
std::vector<OrderedQuotient> ordered_quotients(const SymbolQuotient& q);  // 1 or 2
int quotient_total(const OrderedQuotient& q);
OrderedQuotient swap_halves(const OrderedQuotient& q);

// The ordered quotients of `la` aligned to the canonical row order of its
// core (1 entry, or 2 when the core is degenerate and the halves differ).
std::vector<OrderedQuotient> extract_ordered_quotients(const Symbol& la, int e, HookKind mode);

struct ComposedSymbol {
  Symbol symbol;
  std::optional<int> copy;  // set iff core and quotient are both degenerate
};

// Inverse of core/quotient extraction.  `core` must be an e-core for the
// mode; `q` must have 2e components.  When both the core and the quotient
// are degenerate the composed symbol is degenerate and the optional copy
// index (default 0) is echoed; passing a copy index in any other arm is an
// error.
ComposedSymbol compose_symbol(const Symbol& core, const OrderedQuotient& q, int e,
                              HookKind mode, std::optional<int> copy_index = std::nullopt);

// All reduced symbols of the given rank whose defect has the given parity,
// each exactly once (degenerate symbols once; doubling is a label-level
// convention applied downstream), sorted.
std::vector<Symbol> enumerate_symbols(int rank, DefectParity parity);

// All symbols with the given mode-e-core and weight w, each once, sorted.
std::vector<Symbol> enumerate_symbols_with_core(const Symbol& core, int e, HookKind mode, int w);

std::string symbol_to_string(const Symbol& s);  // "[[0,2],[1]]"
Symbol symbol_from_string(const std::string& s);

}  // namespace spb
