// Blocks, irreducible-Brauer labels, weight labels, the block bijection, and
// the center / field-automorphism actions.

#include "spb/labels.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace spb {

namespace {

// [x^w] P(x)^slots where P is the partition generating function: the number
// of `slots`-tuples of partitions with total size w.
long long count_tuples_dp(int w, int slots) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, long long> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(w, slots);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<long long> p(w + 1);
  for (int s = 0; s <= w; ++s) p[s] = static_cast<long long>(enumerate_partitions(s).size());
  std::vector<long long> acc(w + 1, 0);
  acc[0] = 1;
  for (int k = 0; k < slots; ++k) {
    std::vector<long long> nxt(w + 1, 0);
    for (int t = 0; t <= w; ++t) {
      if (acc[t] == 0) continue;
      for (int s = 0; t + s <= w; ++s) nxt[t + s] += acc[t] * p[s];
    }
    acc = std::move(nxt);
  }
  cache[key] = acc[w];
  return acc[w];
}

long long partition_count(int n) {
  return static_cast<long long>(enumerate_partitions(n).size());
}

bool is_symbol_class(const SsContext& ctx, int classIdx) {
  return ctx.classes[classIdx].family == Family::F0;
}

const CoreComponent* find_core(const BlockLabel& b, int classIdx) {
  for (const auto& c : b.cores)
    if (c.classIdx == classIdx) return &c;
  return nullptr;
}

}  // namespace

std::string case_to_string(CaseTag t) {
  switch (t) {
    case CaseTag::I: return "I";
    case CaseTag::II: return "II";
    case CaseTag::III: return "III";
    case CaseTag::IV: return "IV";
    case CaseTag::V: return "V";
    case CaseTag::VI: return "VI";
    case CaseTag::EvenPlain: return "even";
  }
  throw std::logic_error("unknown case tag");
}

bool CoreComponent::operator<(const CoreComponent& o) const {
  auto key = [](const CoreComponent& c) {
    return std::tie(c.classIdx, c.mult, c.weight, c.isSymbol, c.corePart, c.coreSym.rows);
  };
  return key(*this) < key(o);
}

bool BlockLabel::operator<(const BlockLabel& o) const {
  auto key = [](const BlockLabel& b) { return std::tie(b.s.mults, b.cores, b.tag, b.copy, b.i); };
  return key(*this) < key(o);
}

std::string block_variant(const BlockLabel& b) {
  if (b.tag == CaseTag::III) return b.copy == 0 ? "copy0" : "copy1";
  if (b.tag == CaseTag::VI) return "pair";
  return "single";
}

namespace {

std::vector<CoreComponent> core_options(const SsContext& ctx, int classIdx, int m) {
  std::vector<CoreComponent> out;
  if (!is_symbol_class(ctx, classIdx)) {
    int e = ctx.egamma[classIdx];
    for (int w = 0; m - w * e >= 0; ++w)
      for (const auto& p : enumerate_partitions(m - w * e))
        if (is_e_core(p, e)) out.push_back(CoreComponent{classIdx, m, w, false, p, Symbol{}});
  } else {
    bool xminus = (classIdx == ctx.idxXminus1);
    int R = xminus ? (m - 1) / 2 : m / 2;
    DefectParity par = xminus ? DefectParity::Odd : DefectParity::Even;
    int e = ctx.params.e;
    for (int w = 0; R - w * e >= 0; ++w)
      for (const auto& sym : enumerate_symbols(R - w * e, par))
        if (symbol_core(sym, e, ctx.f0mode) == sym)
          out.push_back(CoreComponent{classIdx, m, w, true, Partition{}, sym});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void product_blocks(const SsContext& ctx, const SemisimpleLabel& s,
                    const std::vector<std::vector<CoreComponent>>& options, std::size_t idx,
                    std::vector<CoreComponent>& cur, std::vector<BlockLabel>& out) {
  if (idx == options.size()) {
    BlockLabel b;
    b.s = s;
    b.cores = cur;
    int mXp1 = (ctx.idxXplus1 >= 0) ? ss_mult(s, ctx.idxXplus1) : 0;
    if (ctx.idxXplus1 < 0) {
      b.tag = CaseTag::EvenPlain;
    } else if (mXp1 == 0) {
      b.tag = CaseTag::I;
    } else {
      const CoreComponent* c = find_core(b, ctx.idxXplus1);
      if (is_empty_symbol(c->coreSym))
        b.tag = CaseTag::IV;
      else if (is_degenerate(c->coreSym))
        b.tag = (c->weight == 0) ? CaseTag::III : CaseTag::VI;
      else
        b.tag = (c->weight == 0) ? CaseTag::II : CaseTag::V;
    }
    b.centerRange = (mXp1 > 0) ? ctx.centerFull / 2 : ctx.centerFull;
    b.i = 0;
    if (b.tag == CaseTag::III) {
      b.copy = 0;
      out.push_back(b);
      b.copy = 1;
      out.push_back(std::move(b));
    } else {
      b.copy = 0;
      out.push_back(std::move(b));
    }
    return;
  }
  for (const auto& opt : options[idx]) {
    cur.push_back(opt);
    product_blocks(ctx, s, options, idx + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<BlockLabel> enumerate_blocks_for(const SsContext& ctx, const SemisimpleLabel& s) {
  std::vector<std::vector<CoreComponent>> options;
  options.reserve(s.mults.size());
  for (const auto& [classIdx, m] : s.mults) options.push_back(core_options(ctx, classIdx, m));
  std::vector<BlockLabel> out;
  std::vector<CoreComponent> cur;
  product_blocks(ctx, s, options, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BlockLabel> enumerate_blocks(const SsContext& ctx) {
  std::vector<BlockLabel> out;
  for (const auto& s : enumerate_semisimple(ctx)) {
    auto bs = enumerate_blocks_for(ctx, s);
    out.insert(out.end(), bs.begin(), bs.end());
  }
  return out;
}

bool IBrComponent::operator<(const IBrComponent& o) const {
  auto key = [](const IBrComponent& c) {
    int cp = c.copy.has_value() ? *c.copy : -1;
    return std::make_tuple(c.classIdx, c.isSymbol, c.part, c.sym.rows, cp);
  };
  return key(*this) < key(o);
}

bool WeightComponent::operator<(const WeightComponent& o) const {
  auto key = [](const WeightComponent& c) {
    return std::tie(c.classIdx, c.form, c.tuple, c.j);
  };
  return key(*this) < key(o);
}

namespace {

// The X+1 component behaves according to the block's case tag; every other
// symbol component (X-1 has odd defect, hence a non-degenerate core) takes
// all quotient tuples.
std::vector<IBrComponent> ibr_component_options(const SsContext& ctx, const BlockLabel& b,
                                                const CoreComponent& core) {
  std::vector<IBrComponent> out;
  if (!core.isSymbol) {
    int e = ctx.egamma[core.classIdx];
    for (const auto& T : enumerate_tuples(core.weight, e))
      out.push_back(IBrComponent{core.classIdx, false, compose(core.corePart, T, e), Symbol{},
                                 std::nullopt});
    std::sort(out.begin(), out.end());
    return out;
  }
  int e = ctx.params.e;
  HookKind mode = ctx.f0mode;
  bool xplus = (core.classIdx == ctx.idxXplus1);
  if (xplus && b.tag == CaseTag::III) {
    out.push_back(IBrComponent{core.classIdx, true, Partition{}, core.coreSym, b.copy});
  } else if (xplus && (b.tag == CaseTag::IV || b.tag == CaseTag::VI)) {
    // Degenerate core: swapped tuples compose equal, so walk one arm of the
    // pairing; a symmetric tuple yields a degenerate symbol, which stands
    // for two labels.
    for (const auto& T : enumerate_tuples(core.weight, 2 * e)) {
      OrderedQuotient sw = swap_halves(T);
      if (sw < T) continue;
      Symbol lam = compose_symbol(core.coreSym, T, e, mode).symbol;
      if (sw == T) {
        out.push_back(IBrComponent{core.classIdx, true, Partition{}, lam, 0});
        out.push_back(IBrComponent{core.classIdx, true, Partition{}, lam, 1});
      } else {
        out.push_back(IBrComponent{core.classIdx, true, Partition{}, lam, std::nullopt});
      }
    }
  } else {
    for (const auto& T : enumerate_tuples(core.weight, 2 * e))
      out.push_back(IBrComponent{core.classIdx, true, Partition{},
                                 compose_symbol(core.coreSym, T, e, mode).symbol, std::nullopt});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightComponent> weight_component_options(const SsContext& ctx, const BlockLabel& b,
                                                      const CoreComponent& core) {
  std::vector<WeightComponent> out;
  if (!core.isSymbol) {
    int e = ctx.egamma[core.classIdx];
    for (const auto& T : enumerate_tuples(core.weight, e))
      out.push_back(WeightComponent{core.classIdx, WeightForm::Plain, T, 0});
    std::sort(out.begin(), out.end());
    return out;
  }
  int e = ctx.params.e;
  bool xplus = (core.classIdx == ctx.idxXplus1);
  if (xplus && (b.tag == CaseTag::IV || b.tag == CaseTag::VI)) {
    for (const auto& T : enumerate_tuples(core.weight, 2 * e)) {
      OrderedQuotient sw = swap_halves(T);
      if (sw < T) continue;
      if (sw == T) {
        out.push_back(WeightComponent{core.classIdx, WeightForm::Sym, T, 0});
        out.push_back(WeightComponent{core.classIdx, WeightForm::Sym, T, 1});
      } else {
        out.push_back(WeightComponent{core.classIdx, WeightForm::Pair, T, 0});
      }
    }
  } else {
    // Cases II and V, the X-1 component, and the even-characteristic and
    // case III components (case III has weight 0: the single empty tuple).
    for (const auto& T : enumerate_tuples(core.weight, 2 * e))
      out.push_back(WeightComponent{core.classIdx, WeightForm::Plain, T, 0});
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <typename Comp, typename Label>
void product_labels(const std::vector<std::vector<Comp>>& options, std::size_t idx,
                    std::vector<Comp>& cur, std::vector<Label>& out) {
  if (idx == options.size()) {
    out.push_back(Label{cur});
    return;
  }
  for (const auto& c : options[idx]) {
    cur.push_back(c);
    product_labels(options, idx + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<IBrLabel> enumerate_ibr(const SsContext& ctx, const BlockLabel& b) {
  std::vector<std::vector<IBrComponent>> options;
  options.reserve(b.cores.size());
  for (const auto& core : b.cores) options.push_back(ibr_component_options(ctx, b, core));
  std::vector<IBrLabel> out;
  std::vector<IBrComponent> cur;
  product_labels(options, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WeightLabel> enumerate_weights(const SsContext& ctx, const BlockLabel& b) {
  std::vector<std::vector<WeightComponent>> options;
  options.reserve(b.cores.size());
  for (const auto& core : b.cores) options.push_back(weight_component_options(ctx, b, core));
  std::vector<WeightLabel> out;
  std::vector<WeightComponent> cur;
  product_labels(options, 0, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

long long component_count(const SsContext& ctx, const BlockLabel& b, const CoreComponent& core) {
  if (!core.isSymbol) return count_tuples_dp(core.weight, ctx.egamma[core.classIdx]);
  int e = ctx.params.e;
  bool xplus = (core.classIdx == ctx.idxXplus1);
  if (xplus && b.tag == CaseTag::III) return 1;
  if (xplus && (b.tag == CaseTag::IV || b.tag == CaseTag::VI)) {
    long long N = count_tuples_dp(core.weight, 2 * e);
    long long S = (core.weight % 2 == 0) ? count_tuples_dp(core.weight / 2, e) : 0;
    return (N - S) / 2 + 2 * S;
  }
  return count_tuples_dp(core.weight, 2 * e);
}

}  // namespace

long long count_ibr(const SsContext& ctx, const BlockLabel& b) {
  long long total = 1;
  for (const auto& core : b.cores) total *= component_count(ctx, b, core);
  return total;
}

long long count_weights(const SsContext& ctx, const BlockLabel& b) { return count_ibr(ctx, b); }

WeightLabel bijection_image(const SsContext& ctx, const BlockLabel& b, const IBrLabel& chi) {
  if (chi.comps.size() != b.cores.size())
    throw std::invalid_argument("label does not match the block's components");
  WeightLabel out;
  out.comps.reserve(chi.comps.size());
  for (std::size_t k = 0; k < chi.comps.size(); ++k) {
    const IBrComponent& c = chi.comps[k];
    const CoreComponent& core = b.cores[k];
    if (c.classIdx != core.classIdx)
      throw std::invalid_argument("label component order does not match the block");
    if (!c.isSymbol) {
      out.comps.push_back(
          WeightComponent{c.classIdx, WeightForm::Plain, e_quotient(c.part, ctx.egamma[c.classIdx]), 0});
      continue;
    }
    int e = ctx.params.e;
    HookKind mode = ctx.f0mode;
    bool xplus = (c.classIdx == ctx.idxXplus1);
    if (xplus && b.tag == CaseTag::III) {
      out.comps.push_back(
          WeightComponent{c.classIdx, WeightForm::Plain, OrderedQuotient(2 * e), 0});
      continue;
    }
    auto quots = extract_ordered_quotients(c.sym, e, mode);
    if (xplus && (b.tag == CaseTag::IV || b.tag == CaseTag::VI)) {
      if (c.copy.has_value()) {
        // Degenerate symbol: its quotient is symmetric and unique.
        out.comps.push_back(WeightComponent{c.classIdx, WeightForm::Sym, quots.front(), *c.copy});
      } else {
        OrderedQuotient rep = *std::min_element(quots.begin(), quots.end());
        out.comps.push_back(WeightComponent{c.classIdx, WeightForm::Pair, rep, 0});
      }
      continue;
    }
    out.comps.push_back(WeightComponent{c.classIdx, WeightForm::Plain, quots.front(), 0});
  }
  return out;
}

long long direct_label_count(const SsContext& ctx, const SemisimpleLabel& s) {
  long long total = 1;
  for (const auto& [classIdx, m] : s.mults) {
    if (!is_symbol_class(ctx, classIdx)) {
      total *= partition_count(m);
    } else if (classIdx == ctx.idxXminus1) {
      total *= static_cast<long long>(enumerate_symbols((m - 1) / 2, DefectParity::Odd).size());
    } else {
      long long c = 0;
      for (const auto& sym : enumerate_symbols(m / 2, DefectParity::Even))
        c += (is_degenerate(sym) && !is_empty_symbol(sym)) ? 2 : 1;
      total *= c;
    }
  }
  return total;
}

long long kform_component_count(int ell, int slotsBase, int w) {
  if (w < 0) throw std::invalid_argument("negative weight");
  // Per-size counts of ell-cores, by direct enumeration.
  std::vector<long long> coreCount(w + 1, 0);
  for (int sz = 0; sz <= w; ++sz)
    for (const auto& p : enumerate_partitions(sz))
      if (is_e_core(p, ell)) ++coreCount[sz];
  std::vector<long long> total(w + 1, 0);
  total[0] = 1;
  long long scale = 1;  // ell^d
  for (int d = 0; scale <= w; ++d, scale *= ell) {
    int slots = static_cast<int>(slotsBase * scale);
    int cap = w / static_cast<int>(scale);
    // Row generating vector: `slots` cores with total size t (t <= cap).
    std::vector<long long> row(cap + 1, 0);
    row[0] = 1;
    for (int k = 0; k < slots; ++k) {
      std::vector<long long> nxt(cap + 1, 0);
      for (int t = 0; t <= cap; ++t) {
        if (row[t] == 0) continue;
        for (int sz = 0; t + sz <= cap; ++sz)
          if (coreCount[sz] != 0) nxt[t + sz] += row[t] * coreCount[sz];
      }
      row = std::move(nxt);
    }
    // Fold into the running total at weight scale ell^d.
    std::vector<long long> merged(w + 1, 0);
    for (int t = 0; t <= w; ++t) {
      if (total[t] == 0) continue;
      for (int u = 0; u <= cap && t + static_cast<int>(scale) * u <= w; ++u)
        if (row[u] != 0) merged[t + static_cast<int>(scale) * u] += total[t] * row[u];
    }
    total = std::move(merged);
  }
  return total[w];
}

long long kform_paired_count(int ell, int e, int w) {
  long long N = kform_component_count(ell, 2 * e, w);
  long long S = (w % 2 == 0) ? kform_component_count(ell, e, w / 2) : 0;
  return (N - S) / 2 + 2 * S;
}

BlockLabel act_center_block(const SsContext& ctx, BlockLabel b) {
  (void)ctx;
  if (b.centerRange <= 0) throw std::invalid_argument("block has no center range");
  b.i += 1;
  if (b.i == b.centerRange) {
    b.i = 0;
    if (b.tag == CaseTag::III) b.copy ^= 1;
  }
  return b;
}

LabeledIBr act_center(const SsContext& ctx, LabeledIBr x) {
  bool wrap = (x.block.i + 1 == x.block.centerRange);
  x.block = act_center_block(ctx, x.block);
  if (wrap)
    for (auto& c : x.chi.comps)
      if (c.copy.has_value()) c.copy = 1 - *c.copy;
  return x;
}

LabeledWeight act_center(const SsContext& ctx, LabeledWeight x) {
  bool wrap = (x.block.i + 1 == x.block.centerRange);
  x.block = act_center_block(ctx, x.block);
  if (wrap)
    for (auto& c : x.w.comps)
      if (c.form == WeightForm::Sym) c.j = 1 - c.j;
  return x;
}

namespace {

std::vector<int> field_permutation_pow(const SsContext& ctx, int k) {
  std::vector<int> perm = frobenius_class_permutation(ctx);
  int f = ctx.gf->f();
  k = ((k % f) + f) % f;
  std::vector<int> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[i] = static_cast<int>(i);
  for (int t = 0; t < k; ++t)
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = perm[out[i]];
  return out;
}

}  // namespace

BlockLabel act_field_block(const SsContext& ctx, const BlockLabel& b, int k) {
  if (ctx.gf->f() == 1) return b;
  auto perm = field_permutation_pow(ctx, k);
  BlockLabel r = b;
  r.s = apply_class_permutation(b.s, perm);
  for (auto& c : r.cores) c.classIdx = perm[c.classIdx];
  std::sort(r.cores.begin(), r.cores.end());
  return r;
}

LabeledIBr act_field(const SsContext& ctx, const LabeledIBr& x, int k) {
  if (ctx.gf->f() == 1) return x;
  auto perm = field_permutation_pow(ctx, k);
  LabeledIBr r = x;
  r.block.s = apply_class_permutation(x.block.s, perm);
  for (auto& c : r.block.cores) c.classIdx = perm[c.classIdx];
  std::sort(r.block.cores.begin(), r.block.cores.end());
  for (auto& c : r.chi.comps) c.classIdx = perm[c.classIdx];
  std::sort(r.chi.comps.begin(), r.chi.comps.end());
  return r;
}

LabeledWeight act_field(const SsContext& ctx, const LabeledWeight& x, int k) {
  if (ctx.gf->f() == 1) return x;
  auto perm = field_permutation_pow(ctx, k);
  LabeledWeight r = x;
  r.block.s = apply_class_permutation(x.block.s, perm);
  for (auto& c : r.block.cores) c.classIdx = perm[c.classIdx];
  std::sort(r.block.cores.begin(), r.block.cores.end());
  for (auto& c : r.w.comps) c.classIdx = perm[c.classIdx];
  std::sort(r.w.comps.begin(), r.w.comps.end());
  return r;
}

long long center_block_orbit(const SsContext& ctx, const BlockLabel& b) {
  BlockLabel cur = act_center_block(ctx, b);
  long long n = 1;
  while (!(cur == b)) {
    cur = act_center_block(ctx, cur);
    ++n;
    if (n > 4 * b.centerRange + 4) throw std::logic_error("center orbit failed to close");
  }
  return n;
}

long long center_ibr_orbit(const SsContext& ctx, const LabeledIBr& x) {
  LabeledIBr cur = act_center(ctx, x);
  long long n = 1;
  while (!(cur == x)) {
    cur = act_center(ctx, cur);
    ++n;
    if (n > 4 * x.block.centerRange + 4) throw std::logic_error("center orbit failed to close");
  }
  return n;
}

long long center_weight_orbit(const SsContext& ctx, const LabeledWeight& x) {
  LabeledWeight cur = act_center(ctx, x);
  long long n = 1;
  while (!(cur == x)) {
    cur = act_center(ctx, cur);
    ++n;
    if (n > 4 * x.block.centerRange + 4) throw std::logic_error("center orbit failed to close");
  }
  return n;
}

}  // namespace spb
