// Symbol calculus implementation: reduced two-row symbols, hook/cohook
// cores and quotients, composition, and enumeration.
//
// Shift stability is the load-bearing invariant throughout.  Hook mode works
// per row with the slot labelling (residue - row size) mod e: one symbol
// shift either leaves a slot's runner levels unchanged or applies a beta-set
// shift {0} u (L+1), so the slot partitions are representative-independent.
// Cohook mode glues the two rows into 2e alternating chains; one symbol
// shift rotates the raw chain index by +1 and increments g = floor(N/2) by
// one, so J = (raw - g) mod 2e is stable, and the two chains that wrap gain
// a height-0 bead while their other beads rise by one: again a beta shift.

#include "spb/symbol.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace spb {

namespace {

void validate_row(const BetaSet& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] < 0) throw std::invalid_argument("symbol row entries must be non-negative");
    if (i > 0 && r[i] <= r[i - 1])
      throw std::invalid_argument("symbol rows must be strictly increasing");
  }
}

// One inverse shift: drop the leading 0 of each row and decrement the rest.
bool try_reduce(std::array<BetaSet, 2>& rows) {
  if (rows[0].empty() || rows[1].empty()) return false;
  if (rows[0][0] != 0 || rows[1][0] != 0) return false;
  for (auto& r : rows) {
    r.erase(r.begin());
    for (int& x : r) --x;
  }
  return true;
}

std::array<BetaSet, 2> shift_rows(std::array<BetaSet, 2> rows, int t) {
  for (auto& r : rows) {
    BetaSet nr;
    nr.reserve(r.size() + t);
    for (int i = 0; i < t; ++i) nr.push_back(i);
    for (int x : r) nr.push_back(x + t);
    r = std::move(nr);
  }
  return rows;
}

int rank_offset(int totalBeads) {
  int t = totalBeads - 1;
  return t <= 0 ? 0 : (t * t) / 4;
}

// Per-row hook data: runner levels per slot for each row, and the packed rows.
struct HookDecomp {
  std::array<std::vector<BetaSet>, 2> levels;  // [row][slot] ascending levels
  std::array<BetaSet, 2> packed;               // rows with every runner slid down
};

HookDecomp hook_decompose(const std::array<BetaSet, 2>& rows, int e) {
  HookDecomp d;
  for (int h = 0; h < 2; ++h) {
    d.levels[h] = runner_levels(rows[h], e);
    int n = static_cast<int>(rows[h].size());
    BetaSet p;
    p.reserve(rows[h].size());
    for (int j = 0; j < e; ++j) {
      int r = (j + n) % e;  // absolute residue of slot j at this row size
      for (int k = 0; k < static_cast<int>(d.levels[h][j].size()); ++k)
        p.push_back(k * e + r);
    }
    std::sort(p.begin(), p.end());
    d.packed[h] = std::move(p);
  }
  return d;
}

// Cohook data: heights of the beads on each of the 2e chains, plus the
// anchor g used for the stable labelling.
struct ChainDecomp {
  std::vector<BetaSet> heights;  // [J] ascending heights
  int g = 0;
};

ChainDecomp chain_decompose(const std::array<BetaSet, 2>& rows, int e) {
  ChainDecomp d;
  int twoE = 2 * e;
  d.heights.assign(twoE, {});
  int total = static_cast<int>(rows[0].size() + rows[1].size());
  d.g = total / 2;
  for (int h = 0; h < 2; ++h)
    for (int x : rows[h]) {
      int i = x % e;
      int k = x / e;
      int chi = (k + h) % 2;
      int J = ((i + e * chi - d.g) % twoE + twoE) % twoE;
      d.heights[J].push_back(k);
    }
  for (auto& v : d.heights) std::sort(v.begin(), v.end());
  return d;
}

// Inverse of chain_decompose: place height-k beads of chain J back into rows.
std::array<BetaSet, 2> rows_from_chains(const std::vector<BetaSet>& heights, int e, int g) {
  std::array<BetaSet, 2> rows;
  int twoE = 2 * e;
  for (int J = 0; J < twoE; ++J)
    for (int k : heights[J]) {
      int j = (J + g) % twoE;
      int i = j % e;
      int chi = j / e;
      int h = (chi + k) % 2;
      rows[h].push_back(k * e + i);
    }
  for (auto& r : rows) std::sort(r.begin(), r.end());
  return rows;
}

void require_valid_e(int e) {
  if (e < 1) throw std::invalid_argument("e must be positive");
}

}  // namespace

Symbol make_symbol(BetaSet a, BetaSet b) {
  validate_row(a);
  validate_row(b);
  std::array<BetaSet, 2> rows{std::move(a), std::move(b)};
  while (try_reduce(rows)) {
  }
  if (rows[1] < rows[0]) std::swap(rows[0], rows[1]);
  return Symbol{std::move(rows)};
}

std::array<BetaSet, 2> shifted_rows(const Symbol& s, int t) {
  if (t < 0) throw std::invalid_argument("shift count must be non-negative");
  return shift_rows(s.rows, t);
}

int rank(const Symbol& s) {
  long long sum = 0;
  for (const auto& r : s.rows) sum += std::accumulate(r.begin(), r.end(), 0LL);
  int total = static_cast<int>(s.rows[0].size() + s.rows[1].size());
  return static_cast<int>(sum - rank_offset(total));
}

int defect(const Symbol& s) {
  return std::abs(static_cast<int>(s.rows[0].size()) - static_cast<int>(s.rows[1].size()));
}

bool is_degenerate(const Symbol& s) { return s.rows[0] == s.rows[1]; }

bool is_empty_symbol(const Symbol& s) { return s.rows[0].empty() && s.rows[1].empty(); }

Symbol symbol_core(const Symbol& la, int e, HookKind mode) {
  require_valid_e(e);
  if (mode == HookKind::Hook) {
    HookDecomp d = hook_decompose(la.rows, e);
    return make_symbol(d.packed[0], d.packed[1]);
  }
  ChainDecomp d = chain_decompose(la.rows, e);
  std::vector<BetaSet> packed(d.heights.size());
  for (std::size_t J = 0; J < d.heights.size(); ++J) {
    int c = static_cast<int>(d.heights[J].size());
    packed[J].resize(c);
    std::iota(packed[J].begin(), packed[J].end(), 0);
  }
  auto rows = rows_from_chains(packed, e, d.g);
  return make_symbol(rows[0], rows[1]);
}

int symbol_weight(const Symbol& la, int e, HookKind mode) {
  Symbol core = symbol_core(la, e, mode);
  int diff = rank(la) - rank(core);
  if (diff % e != 0) throw std::logic_error("rank drop not divisible by e");
  return diff / e;
}

SymbolQuotient make_symbol_quotient(std::vector<Partition> first, std::vector<Partition> second) {
  SymbolQuotient q{{std::move(first), std::move(second)}};
  if (q.halves[1] < q.halves[0]) std::swap(q.halves[0], q.halves[1]);
  return q;
}

namespace {

// Ordered quotient in the stored symbol's own frame: hook mode lists row 0's
// slot partitions then row 1's; cohook mode lists chains J = 0 .. 2e-1.
OrderedQuotient raw_ordered_quotient(const Symbol& la, int e, HookKind mode) {
  OrderedQuotient q(2 * e);
  if (mode == HookKind::Hook) {
    HookDecomp d = hook_decompose(la.rows, e);
    for (int h = 0; h < 2; ++h)
      for (int j = 0; j < e; ++j) q[h * e + j] = partition_from_beta(d.levels[h][j]);
  } else {
    ChainDecomp d = chain_decompose(la.rows, e);
    for (int J = 0; J < 2 * e; ++J) q[J] = partition_from_beta(d.heights[J]);
  }
  return q;
}

}  // namespace

SymbolQuotient symbol_quotient(const Symbol& la, int e, HookKind mode) {
  require_valid_e(e);
  OrderedQuotient raw = raw_ordered_quotient(la, e, mode);
  std::vector<Partition> first(raw.begin(), raw.begin() + e);
  std::vector<Partition> second(raw.begin() + e, raw.end());
  return make_symbol_quotient(std::move(first), std::move(second));
}

std::vector<OrderedQuotient> ordered_quotients(const SymbolQuotient& q) {
  OrderedQuotient a;
  a.insert(a.end(), q.halves[0].begin(), q.halves[0].end());
  a.insert(a.end(), q.halves[1].begin(), q.halves[1].end());
  if (q.degenerate()) return {a};
  OrderedQuotient b;
  b.insert(b.end(), q.halves[1].begin(), q.halves[1].end());
  b.insert(b.end(), q.halves[0].begin(), q.halves[0].end());
  return {a, b};
}

int quotient_total(const OrderedQuotient& q) {
  long long t = 0;
  for (const auto& p : q) t += partition_sum(p);
  return static_cast<int>(t);
}

OrderedQuotient swap_halves(const OrderedQuotient& q) {
  if (q.size() % 2 != 0) throw std::invalid_argument("ordered quotient must have 2e components");
  std::size_t e = q.size() / 2;
  OrderedQuotient r(q.begin() + e, q.end());
  r.insert(r.end(), q.begin(), q.begin() + e);
  return r;
}

std::vector<OrderedQuotient> extract_ordered_quotients(const Symbol& la, int e, HookKind mode) {
  require_valid_e(e);
  OrderedQuotient raw = raw_ordered_quotient(la, e, mode);

  // Packed pair in the stored frame, before canonicalisation.
  std::array<BetaSet, 2> packed;
  int g = 0;
  if (mode == HookKind::Hook) {
    packed = hook_decompose(la.rows, e).packed;
  } else {
    ChainDecomp d = chain_decompose(la.rows, e);
    g = d.g;
    std::vector<BetaSet> ph(d.heights.size());
    for (std::size_t J = 0; J < d.heights.size(); ++J) {
      ph[J].resize(d.heights[J].size());
      std::iota(ph[J].begin(), ph[J].end(), 0);
    }
    packed = rows_from_chains(ph, e, g);
  }

  Symbol core = make_symbol(packed[0], packed[1]);
  int beadDrop = static_cast<int>(packed[0].size() + packed[1].size()) -
                 static_cast<int>(core.rows[0].size() + core.rows[1].size());
  auto sh = shift_rows(core.rows, beadDrop / 2);

  // Aligning the canonical core frame to the stored frame: a row swap in
  // cohook mode relabels every chain J -> J + e, and in hook mode trades the
  // two slot tuples; either way the ordered quotient's halves swap.
  std::vector<OrderedQuotient> out;
  bool idMatch = (sh[0] == packed[0] && sh[1] == packed[1]);
  bool swapMatch = (sh[0] == packed[1] && sh[1] == packed[0]);
  if (!idMatch && !swapMatch) throw std::logic_error("core does not align with packed rows");
  if (idMatch) out.push_back(raw);
  if (swapMatch) {
    OrderedQuotient s = swap_halves(raw);
    if (!idMatch || s != raw) out.push_back(std::move(s));
  }
  return out;
}

ComposedSymbol compose_symbol(const Symbol& core, const OrderedQuotient& q, int e, HookKind mode,
                              std::optional<int> copy_index) {
  require_valid_e(e);
  if (static_cast<int>(q.size()) != 2 * e)
    throw std::invalid_argument("ordered quotient must have 2e components");
  for (const auto& p : q)
    if (!is_partition(p)) throw std::invalid_argument("quotient components must be partitions");
  if (symbol_core(core, e, mode) != core)
    throw std::invalid_argument("compose_symbol: first argument is not a core");

  bool copyArm = is_degenerate(core) && swap_halves(q) == q;
  if (copy_index.has_value()) {
    if (!copyArm)
      throw std::invalid_argument("copy index is only meaningful for a degenerate core and symmetric quotient");
    if (*copy_index != 0 && *copy_index != 1)
      throw std::invalid_argument("copy index must be 0 or 1");
  }

  int pad = 0;
  for (const auto& p : q) pad = std::max(pad, static_cast<int>(p.size()));
  auto rows = shift_rows(core.rows, e * pad);  // every slot/chain gains `pad` beads

  std::array<BetaSet, 2> built;
  if (mode == HookKind::Hook) {
    HookDecomp d = hook_decompose(rows, e);
    for (int h = 0; h < 2; ++h) {
      int n = static_cast<int>(rows[h].size());
      BetaSet nr;
      nr.reserve(rows[h].size());
      for (int j = 0; j < e; ++j) {
        int r = (j + n) % e;
        BetaSet lv = beta_set(q[h * e + j], static_cast<int>(d.levels[h][j].size()));
        for (int k : lv) nr.push_back(k * e + r);
      }
      std::sort(nr.begin(), nr.end());
      built[h] = std::move(nr);
    }
  } else {
    ChainDecomp d = chain_decompose(rows, e);
    std::vector<BetaSet> nh(d.heights.size());
    for (int J = 0; J < 2 * e; ++J)
      nh[J] = beta_set(q[J], static_cast<int>(d.heights[J].size()));
    built = rows_from_chains(nh, e, d.g);
  }

  ComposedSymbol out;
  out.symbol = make_symbol(built[0], built[1]);
  if (copyArm) out.copy = copy_index.value_or(0);
  return out;
}

namespace {

long long min_sum_sizes(int a, int b) {
  // Minimal entry sum of a reduced pair with row sizes a >= b.
  long long base = static_cast<long long>(a) * (a - 1) / 2;
  if (b > 0) base += static_cast<long long>(b) * (b + 1) / 2;
  return base;
}

long long min_rank_sizes(int a, int b) { return min_sum_sizes(a, b) - rank_offset(a + b); }

void gen_rows_with_sum(int size, int minEntry, long long sum, BetaSet& cur,
                       std::vector<BetaSet>& out) {
  if (size == 0) {
    if (sum == 0) out.push_back(cur);
    return;
  }
  // Entries v < v+1 < ... force a minimal completion of size*v + size*(size-1)/2.
  long long tailMin = static_cast<long long>(size) * (size - 1) / 2;
  for (int v = minEntry; static_cast<long long>(size) * v + tailMin <= sum; ++v) {
    cur.push_back(v);
    gen_rows_with_sum(size - 1, v + 1, sum - v, cur, out);
    cur.pop_back();
  }
}

std::vector<BetaSet> rows_with_sum(int size, long long sum) {
  std::vector<BetaSet> out;
  BetaSet cur;
  if (sum >= 0) gen_rows_with_sum(size, 0, sum, cur, out);
  return out;
}

}  // namespace

std::vector<Symbol> enumerate_symbols(int r, DefectParity parity) {
  if (r < 0) throw std::invalid_argument("rank must be non-negative");
  std::set<Symbol> out;
  for (int d = (parity == DefectParity::Odd ? 1 : 0); min_rank_sizes(d, 0) <= r; d += 2) {
    for (int b = 0; min_rank_sizes(b + d, b) <= r; ++b) {
      int a = b + d;
      long long target = r + rank_offset(a + b);
      long long minB = static_cast<long long>(b) * (b - 1) / 2;
      for (long long sumA = static_cast<long long>(a) * (a - 1) / 2; sumA <= target - minB;
           ++sumA) {
        for (const auto& A : rows_with_sum(a, sumA)) {
          for (const auto& B : rows_with_sum(b, target - sumA)) {
            bool zeroA = !A.empty() && A[0] == 0;
            bool zeroB = !B.empty() && B[0] == 0;
            if (zeroA && zeroB) continue;  // not reduced
            if (d == 0 && B < A) continue; // unordered pair: emit once
            out.insert(make_symbol(A, B));
          }
        }
        if (a == 0) break;  // sole empty row; avoid re-running the sum loop
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Symbol> enumerate_symbols_with_core(const Symbol& core, int e, HookKind mode, int w) {
  require_valid_e(e);
  if (w < 0) throw std::invalid_argument("weight must be non-negative");
  if (symbol_core(core, e, mode) != core)
    throw std::invalid_argument("enumerate_symbols_with_core: not a core");
  std::set<Symbol> out;
  for (const auto& tup : enumerate_tuples(w, 2 * e))
    out.insert(compose_symbol(core, tup, e, mode).symbol);
  return {out.begin(), out.end()};
}

std::string symbol_to_string(const Symbol& s) {
  std::ostringstream os;
  os << '[';
  for (int h = 0; h < 2; ++h) {
    if (h) os << ',';
    os << '[';
    for (std::size_t i = 0; i < s.rows[h].size(); ++i) {
      if (i) os << ',';
      os << s.rows[h][i];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

BetaSet parse_int_list(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || s[i] != '[') throw std::invalid_argument("expected '['");
  ++i;
  BetaSet out;
  skip_ws(s, i);
  if (i < s.size() && s[i] == ']') {
    ++i;
    return out;
  }
  while (true) {
    skip_ws(s, i);
    bool any = false;
    int v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      ++i;
      any = true;
    }
    if (!any) throw std::invalid_argument("expected integer");
    out.push_back(v);
    skip_ws(s, i);
    if (i < s.size() && s[i] == ',') {
      ++i;
      continue;
    }
    if (i < s.size() && s[i] == ']') {
      ++i;
      return out;
    }
    throw std::invalid_argument("expected ',' or ']'");
  }
}

}  // namespace

Symbol symbol_from_string(const std::string& str) {
  std::size_t i = 0;
  skip_ws(str, i);
  if (i >= str.size() || str[i] != '[') throw std::invalid_argument("expected '['");
  ++i;
  BetaSet a = parse_int_list(str, i);
  skip_ws(str, i);
  if (i >= str.size() || str[i] != ',') throw std::invalid_argument("expected ','");
  ++i;
  BetaSet b = parse_int_list(str, i);
  skip_ws(str, i);
  if (i >= str.size() || str[i] != ']') throw std::invalid_argument("expected ']'");
  ++i;
  skip_ws(str, i);
  if (i != str.size()) throw std::invalid_argument("trailing characters after symbol");
  return make_symbol(std::move(a), std::move(b));
}

}  // namespace spb
