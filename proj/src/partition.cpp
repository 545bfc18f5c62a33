#include "spb/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spb {

bool is_partition(const Partition& la) {
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (la[i] <= 0) return false;
    if (i > 0 && la[i] > la[i - 1]) return false;
  }
  return true;
}

long long partition_sum(const Partition& la) {
  return std::accumulate(la.begin(), la.end(), 0LL);
}

BetaSet beta_set(const Partition& la, int beads) {
  if (!is_partition(la)) throw std::invalid_argument("beta_set: not a partition");
  if (beads < static_cast<int>(la.size()))
    throw std::invalid_argument("beta_set: fewer beads than parts");
  BetaSet out;
  out.reserve(beads);
  for (int i = beads; i >= 1; --i) {
    int part = (i <= static_cast<int>(la.size())) ? la[i - 1] : 0;
    out.push_back(part + beads - i);
  }
  return out;
}

Partition partition_from_beta(BetaSet beta) {
  std::sort(beta.begin(), beta.end());
  Partition out;
  for (int k = 0; k < static_cast<int>(beta.size()); ++k) {
    if (beta[k] < 0) throw std::invalid_argument("partition_from_beta: negative bead");
    if (k > 0 && beta[k] == beta[k - 1])
      throw std::invalid_argument("partition_from_beta: repeated bead");
    int part = beta[k] - k;
    if (part > 0) out.push_back(part);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<BetaSet> runner_levels(const BetaSet& X, int e) {
  if (e < 1) throw std::invalid_argument("runner_levels: e must be >= 1");
  std::vector<BetaSet> slots(e);
  const int n = static_cast<int>(X.size());
  for (int x : X) {
    if (x < 0) throw std::invalid_argument("runner_levels: negative bead");
    int slot = ((x - n) % e + e) % e;
    slots[slot].push_back(x / e);
  }
  for (auto& s : slots) std::sort(s.begin(), s.end());
  return slots;
}

namespace {

int quotient_bead_count(const Partition& la, int e) {
  int parts = static_cast<int>(la.size());
  return ((parts + e - 1) / e) * e;
}

}  // namespace

std::vector<Partition> e_quotient(const Partition& la, int e) {
  if (e < 1) throw std::invalid_argument("e_quotient: e must be >= 1");
  auto slots = runner_levels(beta_set(la, quotient_bead_count(la, e)), e);
  std::vector<Partition> out;
  out.reserve(e);
  for (auto& s : slots) out.push_back(partition_from_beta(std::move(s)));
  return out;
}

Partition e_core(const Partition& la, int e) {
  if (e < 1) throw std::invalid_argument("e_core: e must be >= 1");
  auto slots = runner_levels(beta_set(la, quotient_bead_count(la, e)), e);
  // The bead count is a multiple of e, so slot j is the absolute residue j;
  // packing each runner down to levels 0..count-1 removes every e-hook.
  BetaSet packed;
  for (int j = 0; j < e; ++j)
    for (int k = 0; k < static_cast<int>(slots[j].size()); ++k)
      packed.push_back(k * e + j);
  return partition_from_beta(std::move(packed));
}

bool is_e_core(const Partition& la, int e) { return e_core(la, e) == la; }

int e_weight(const Partition& la, int e) {
  long long diff = partition_sum(la) - partition_sum(e_core(la, e));
  if (diff % e != 0) throw std::logic_error("e_weight: size drop not divisible by e");
  return static_cast<int>(diff / e);
}

Partition compose(const Partition& core, const std::vector<Partition>& quot, int e) {
  if (e < 1) throw std::invalid_argument("compose: e must be >= 1");
  if (static_cast<int>(quot.size()) != e)
    throw std::invalid_argument("compose: quotient tuple must have e components");
  for (const auto& q : quot)
    if (!is_partition(q)) throw std::invalid_argument("compose: quotient entry not a partition");
  if (!is_e_core(core, e)) throw std::invalid_argument("compose: first argument is not an e-core");

  int pad = 0;
  for (const auto& q : quot) pad = std::max(pad, static_cast<int>(q.size()));
  // Padding by whole multiples of e keeps every slot label; it only deepens
  // each runner, so the packed-core property is preserved.
  int beads = quotient_bead_count(core, e) + e * pad;
  auto slots = runner_levels(beta_set(core, beads), e);
  BetaSet out;
  for (int j = 0; j < e; ++j) {
    auto levels = beta_set(quot[j], static_cast<int>(slots[j].size()));
    for (int lv : levels) out.push_back(lv * e + j);
  }
  return partition_from_beta(std::move(out));
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= std::min(remaining, cap); ++first) {
      cur.push_back(first);
      self(self, remaining - first, first);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

std::vector<std::vector<Partition>> enumerate_tuples(int total, int slots) {
  if (total < 0 || slots < 0) throw std::invalid_argument("enumerate_tuples: negative argument");
  std::vector<std::vector<Partition>> out;
  if (slots == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<Partition> cur(slots);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == slots - 1) {
      for (const auto& p : enumerate_partitions(remaining)) {
        cur[idx] = p;
        out.push_back(cur);
      }
      cur[idx].clear();
      return;
    }
    for (int budget = 0; budget <= remaining; ++budget) {
      for (const auto& p : enumerate_partitions(budget)) {
        cur[idx] = p;
        self(self, idx + 1, remaining - budget);
      }
    }
    cur[idx].clear();
  };
  rec(rec, 0, total);
  return out;
}

std::vector<Partition> enumerate_with_core(const Partition& core, int e, int w) {
  if (w < 0) throw std::invalid_argument("enumerate_with_core: negative weight");
  std::vector<Partition> out;
  for (const auto& tup : enumerate_tuples(w, e)) out.push_back(compose(core, tup, e));
  std::sort(out.begin(), out.end());
  return out;
}

std::string partition_to_string(const Partition& la) {
  std::string s = "[";
  for (std::size_t i = 0; i < la.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(la[i]);
  }
  s += ']';
  return s;
}

Partition partition_from_string(const std::string& s) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  auto fail = [&]() -> void {
    throw std::invalid_argument("partition_from_string: malformed input '" + s + "'");
  };
  skip_ws();
  if (pos >= s.size() || s[pos] != '[') fail();
  ++pos;
  Partition out;
  skip_ws();
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
  } else {
    while (true) {
      skip_ws();
      bool any = false;
      int v = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any) fail();
      out.push_back(v);
      skip_ws();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        break;
      }
      fail();
    }
  }
  skip_ws();
  if (pos != s.size()) fail();
  if (!is_partition(out)) throw std::invalid_argument("partition_from_string: not weakly decreasing positive parts");
  return out;
}

}  // namespace spb
