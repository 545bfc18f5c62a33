// Group-level verification: block-by-block bijection checks, the direct
// recount of labels, tower-form weight counts, Sylow exponent identities,
// and action compatibility.

#include "spb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace spb {

namespace {

using u128 = unsigned __int128;

u128 mul_checked_u128(u128 a, u128 b) {
  if (a != 0 && b > ~static_cast<u128>(0) / a) throw std::overflow_error("group order exceeds 128 bits");
  return a * b;
}

u128 pow_checked_u128(u128 base, long long exp) {
  u128 r = 1;
  for (long long i = 0; i < exp; ++i) r = mul_checked_u128(r, base);
  return r;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

// q^{n^2} * prod_{i<=n} (q^{2i} - 1), times (q - 1) for the conformal group.
u128 group_order_u128(GroupKind kind, int n, int q) {
  if (n < 1 || q < 2) throw std::invalid_argument("group order needs n >= 1 and q >= 2");
  u128 order = pow_checked_u128(static_cast<u128>(q), static_cast<long long>(n) * n);
  u128 qpow = 1;
  for (int i = 1; i <= n; ++i) {
    qpow = mul_checked_u128(qpow, static_cast<u128>(q) * q);
    order = mul_checked_u128(order, qpow - 1);
  }
  if (kind == GroupKind::CSp) order = mul_checked_u128(order, static_cast<u128>(q - 1));
  return order;
}

}  // namespace

std::string status_to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Ok: return "ok";
    case CheckStatus::CountMismatch: return "count-mismatch";
    case CheckStatus::NonInjective: return "non-injective";
    case CheckStatus::Partial: return "partial";
  }
  throw std::logic_error("unknown status");
}

std::string group_order_decimal(GroupKind kind, int n, int q) {
  return u128_to_string(group_order_u128(kind, n, q));
}

long long group_order_ell_exponent(GroupKind kind, int n, int q, int ell) {
  if (ell < 2) throw std::invalid_argument("ell must be at least 2");
  u128 order = group_order_u128(kind, n, q);
  long long v = 0;
  while (order % static_cast<u128>(ell) == 0) {
    order /= static_cast<u128>(ell);
    ++v;
  }
  return v;
}

SylowReport sylow_check(GroupKind kind, int n, int q, int ell) {
  EllParams params = ell_params(q, ell);
  SylowReport r;
  r.kind = kind;
  r.n = n;
  r.q = q;
  r.ell = ell;
  r.e = params.e;
  r.a = params.a;
  r.w = n / params.e;

  // Tower form: each base-ell digit c_k of w contributes c_k copies of a
  // wreath tower of height k, of ell-exponent a*ell^k + (ell^k - 1)/(ell - 1).
  long long w = r.w;
  long long scale = 1;
  for (int k = 0; w > 0; ++k, w /= ell) {
    long long c = w % ell;
    long long tower = 0;
    for (int t = 0; t < k; ++t) tower = tower * ell + 1;  // (ell^k - 1)/(ell - 1)
    r.towerExp += c * (static_cast<long long>(r.a) * scale + tower);
    scale *= ell;
  }

  // Factor form: v_ell of each cyclotomic-style factor q^{2i} - 1, evaluated
  // directly.
  u128 qpow = 1;
  for (int i = 1; i <= n; ++i) {
    qpow = mul_checked_u128(qpow, static_cast<u128>(q) * q);
    u128 m = qpow - 1;
    while (m % static_cast<u128>(ell) == 0) {
      m /= static_cast<u128>(ell);
      ++r.factorExp;
    }
  }

  // Count form: a per e-block plus the ell-part of the block count factorial.
  r.countExp = static_cast<long long>(r.a) * r.w;
  for (long long j = 1; j <= r.w; ++j) r.countExp += padic_val(j, ell);

  r.centerExp = (kind == GroupKind::CSp) ? padic_val(q - 1, ell) : 0;
  r.orderExp = group_order_ell_exponent(kind, n, q, ell);
  r.ok = (r.towerExp == r.factorExp) && (r.factorExp == r.countExp) &&
         (r.orderExp == r.factorExp + r.centerExp);
  return r;
}

namespace {

long long kform_block_count(const SsContext& ctx, const BlockLabel& b) {
  long long total = 1;
  for (const auto& core : b.cores) {
    if (!core.isSymbol) {
      total *= kform_component_count(ctx.ell, ctx.egamma[core.classIdx], core.weight);
    } else if (core.classIdx == ctx.idxXplus1 && b.tag == CaseTag::III) {
      total *= 1;
    } else if (core.classIdx == ctx.idxXplus1 &&
               (b.tag == CaseTag::IV || b.tag == CaseTag::VI)) {
      total *= kform_paired_count(ctx.ell, ctx.params.e, core.weight);
    } else {
      total *= kform_component_count(ctx.ell, 2 * ctx.params.e, core.weight);
    }
  }
  return total;
}

BlockReport make_block_report(const SsContext& ctx, const BlockLabel& b) {
  BlockReport r;
  r.block = b;
  auto ibr = enumerate_ibr(ctx, b);
  auto wts = enumerate_weights(ctx, b);
  r.nIbr = static_cast<long long>(ibr.size());
  r.nWeights = static_cast<long long>(wts.size());

  std::set<WeightLabel> wset(wts.begin(), wts.end());
  std::set<WeightLabel> images;
  bool nonInjective = false;
  bool outside = false;
  for (const auto& chi : ibr) {
    WeightLabel im = bijection_image(ctx, b, chi);
    if (!images.insert(im).second) nonInjective = true;
    if (wset.find(im) == wset.end()) outside = true;
  }
  if (nonInjective)
    r.status = CheckStatus::NonInjective;
  else if (r.nIbr != r.nWeights || outside)
    r.status = CheckStatus::CountMismatch;
  else
    r.status = CheckStatus::Ok;

  r.kform = kform_block_count(ctx, b);
  r.kformOk = (r.kform == r.nWeights);
  return r;
}

SsReport make_section(const SsContext& ctx, const SemisimpleLabel& s) {
  SsReport r;
  r.s = s;
  r.direct = direct_label_count(ctx, s);
  for (const auto& b : enumerate_blocks_for(ctx, s)) {
    r.blocks.push_back(make_block_report(ctx, b));
    r.viaBlocks += r.blocks.back().nIbr;
  }
  return r;
}

}  // namespace

CheckStatus GroupReport::overall() const {
  if (partial) return CheckStatus::Partial;
  for (const auto& sec : sections)
    for (const auto& b : sec.blocks)
      if (b.status == CheckStatus::NonInjective) return CheckStatus::NonInjective;
  if (!(countsOk && bijectionOk && partitionOk && kformOk && sylowOk))
    return CheckStatus::CountMismatch;
  return CheckStatus::Ok;
}

GroupReport verify_group(GroupKind kind, int n, int q, int ell, int jobs, double timeBudgetSec) {
  SsContext ctx = make_context(kind, n, q, ell);
  GroupReport rep;
  rep.kind = kind;
  rep.n = n;
  rep.q = q;
  rep.ell = ell;
  rep.params = ctx.params;
  rep.nClasses = static_cast<long long>(ctx.classes.size());

  auto ss = enumerate_semisimple(ctx);
  rep.nSemisimple = static_cast<long long>(ss.size());

  using clock = std::chrono::steady_clock;
  bool budgeted = timeBudgetSec > 0.0;
  auto deadline = clock::now() + std::chrono::duration_cast<clock::duration>(
                                     std::chrono::duration<double>(budgeted ? timeBudgetSec : 0.0));

  std::vector<std::optional<SsReport>> results(ss.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= ss.size()) return;
      if (stop.load()) return;
      if (budgeted && clock::now() > deadline) {
        stop.store(true);
        return;
      }
      results[i] = make_section(ctx, ss[i]);
    }
  };

  int nThreads = std::max(1, jobs);
  nThreads = static_cast<int>(std::min<std::size_t>(nThreads, std::max<std::size_t>(ss.size(), 1)));
  if (nThreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nThreads);
    for (int t = 0; t < nThreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  rep.countsOk = rep.bijectionOk = rep.partitionOk = rep.kformOk = true;
  for (std::size_t i = 0; i < results.size(); ++i) {
    if (!results[i].has_value()) {
      rep.partial = true;
      continue;
    }
    SsReport& sec = *results[i];
    rep.nBlocks += static_cast<long long>(sec.blocks.size());
    rep.directTotal += sec.direct;
    if (sec.viaBlocks != sec.direct) rep.partitionOk = false;
    for (const auto& b : sec.blocks) {
      rep.totalIbr += b.nIbr;
      rep.totalWeights += b.nWeights;
      if (b.nIbr != b.nWeights) rep.countsOk = false;
      if (b.status != CheckStatus::Ok) rep.bijectionOk = false;
      if (!b.kformOk) rep.kformOk = false;
    }
    rep.sections.push_back(std::move(sec));
  }
  if (stop.load()) rep.partial = true;

  rep.sylowOk = sylow_check(kind, n, q, ell).ok;
  return rep;
}

ActionReport check_actions(const SsContext& ctx) {
  ActionReport r;
  r.centerOk = r.orbitsOk = r.fieldOk = true;
  auto blocks = enumerate_blocks(ctx);
  std::set<BlockLabel> blockSet(blocks.begin(), blocks.end());
  int f = ctx.gf->f();

  for (const auto& b : blocks) {
    ++r.blocksChecked;
    long long expectBlock = b.centerRange * (b.tag == CaseTag::III ? 2 : 1);
    if (center_block_orbit(ctx, b) != expectBlock) r.orbitsOk = false;
    for (int k = 1; k < f; ++k)
      if (blockSet.find(act_field_block(ctx, b, k)) == blockSet.end()) r.fieldOk = false;

    for (const auto& chi : enumerate_ibr(ctx, b)) {
      ++r.labelsChecked;
      LabeledIBr x{b, chi};
      LabeledWeight y{b, bijection_image(ctx, b, chi)};

      LabeledIBr ax = act_center(ctx, x);
      LabeledWeight ay = act_center(ctx, y);
      LabeledWeight axImage{ax.block, bijection_image(ctx, ax.block, ax.chi)};
      if (!(axImage == ay)) r.centerOk = false;

      bool flips = (b.tag == CaseTag::III);
      for (const auto& c : chi.comps)
        if (c.copy.has_value()) flips = true;
      long long expect = b.centerRange * (flips ? 2 : 1);
      if (center_ibr_orbit(ctx, x) != expect) r.orbitsOk = false;
      if (center_weight_orbit(ctx, y) != expect) r.orbitsOk = false;

      for (int k = 1; k < f; ++k) {
        LabeledIBr fx = act_field(ctx, x, k);
        LabeledWeight fy = act_field(ctx, y, k);
        LabeledWeight fxImage{fx.block, bijection_image(ctx, fx.block, fx.chi)};
        if (!(fxImage == fy)) r.fieldOk = false;
      }
    }
  }
  return r;
}

}  // namespace spb
