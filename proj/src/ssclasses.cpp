// Verification-point context and semisimple label enumeration.

#include "spb/ssclasses.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace spb {

std::string kind_to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Sp: return "Sp";
    case GroupKind::SOodd: return "SO_odd";
    case GroupKind::CSp: return "CSp";
  }
  throw std::logic_error("unknown group kind");
}

GroupKind kind_from_string(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "sp") return GroupKind::Sp;
  if (t == "so_odd" || t == "soodd") return GroupKind::SOodd;
  if (t == "csp") return GroupKind::CSp;
  throw std::invalid_argument("unknown group kind: " + s);
}

EllParams ell_params(int q, int ell) {
  if (ell < 3 || ell % 2 == 0) throw std::invalid_argument("ell must be an odd prime >= 3");
  if (q % ell == 0) throw std::invalid_argument("ell must not divide q");
  long long q2 = (static_cast<long long>(q) * q) % ell;
  EllParams p{};
  p.e = static_cast<int>(mult_order(q2, ell));
  unsigned long long qe = ipow_checked(q, p.e);
  p.eps = ((qe - 1) % ell == 0) ? +1 : -1;
  unsigned long long q2e = qe * qe;  // q^{2e} <= (q^e)^2; both fit comfortably here
  p.a = padic_val(static_cast<long long>(q2e - 1), ell);
  return p;
}

SsContext make_context(GroupKind kind, int n, int q, int ell) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const GF& F = GF::get(q);  // validates q
  bool qEven = (F.p() == 2);
  if (kind == GroupKind::CSp && qEven)
    throw std::invalid_argument("CSp labels require odd q");
  if (kind == GroupKind::Sp && !qEven)
    throw std::invalid_argument("Sp labels are implemented for even q only");
  if (kind == GroupKind::SOodd)
    throw std::invalid_argument("label enumeration is not provided for SO_odd");

  SsContext ctx;
  ctx.kind = kind;
  ctx.n = n;
  ctx.q = q;
  ctx.ell = ell;
  ctx.params = ell_params(q, ell);
  ctx.gf = &F;
  ctx.f0mode = (ctx.params.eps > 0) ? HookKind::Hook : HookKind::Cohook;
  ctx.classes = classify_polynomials(F, ell, 2 * n);
  ctx.egamma.resize(ctx.classes.size());
  ctx.beta.resize(ctx.classes.size());
  for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
    const PolyClass& c = ctx.classes[i];
    if (c.family == Family::F0) {
      ctx.egamma[i] = ctx.params.e;
      ctx.beta[i] = 2;
      if (c.gamma == poly_x_minus(F, 1))
        ctx.idxXminus1 = static_cast<int>(i);
      else
        ctx.idxXplus1 = static_cast<int>(i);
    } else {
      // Order of eps * q^delta modulo ell drives the core/quotient calculus
      // of the partition attached to this class.
      long long base = 1;
      for (int t = 0; t < c.delta; ++t) base = (base * q) % ell;
      if (c.epsilon < 0) base = (ell - base) % ell;
      ctx.egamma[i] = static_cast<int>(mult_order(base, ell));
      ctx.beta[i] = 1;
    }
  }
  if (ctx.idxXminus1 != 0) throw std::logic_error("X-1 must be the first class");
  ctx.centerFull = prime_to_part(q - 1, ell);
  return ctx;
}

int ss_mult(const SemisimpleLabel& s, int classIdx) {
  for (const auto& [c, m] : s.mults)
    if (c == classIdx) return m;
  return 0;
}

namespace {

void enumerate_rest(const SsContext& ctx, std::size_t idx, int rem,
                    std::vector<std::pair<int, int>>& cur, std::vector<SemisimpleLabel>& out) {
  if (rem == 0) {
    // Remaining classes all take multiplicity zero.
    out.push_back(SemisimpleLabel{cur});
    return;
  }
  if (idx >= ctx.classes.size()) return;
  const PolyClass& c = ctx.classes[idx];
  int step = (static_cast<int>(idx) == ctx.idxXplus1) ? 2 : 1;  // X+1 carries even multiplicity
  enumerate_rest(ctx, idx + 1, rem, cur, out);
  for (int m = step; m * c.degree <= rem; m += step) {
    cur.emplace_back(static_cast<int>(idx), m);
    enumerate_rest(ctx, idx + 1, rem - m * c.degree, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<SemisimpleLabel> enumerate_semisimple(const SsContext& ctx) {
  std::vector<SemisimpleLabel> out;
  int dim = 2 * ctx.n + 1;
  std::vector<std::pair<int, int>> cur;
  for (int m0 = 1; m0 <= dim; m0 += 2) {
    cur.emplace_back(0, m0);
    enumerate_rest(ctx, 1, dim - m0, cur, out);
    cur.pop_back();
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> frobenius_class_permutation(const SsContext& ctx) {
  std::vector<int> perm(ctx.classes.size());
  for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
    Poly g = ctx.classes[i].gamma;
    for (int& c : g) c = ctx.gf->frobenius(c);
    int target = -1;
    for (std::size_t j = 0; j < ctx.classes.size(); ++j) {
      if (ctx.classes[j].gamma == g || ctx.classes[j].gammaDual == g) {
        target = static_cast<int>(j);
        break;
      }
    }
    if (target < 0) throw std::logic_error("Frobenius image of a class not found");
    perm[i] = target;
  }
  return perm;
}

SemisimpleLabel apply_class_permutation(const SemisimpleLabel& s, const std::vector<int>& perm) {
  SemisimpleLabel r;
  r.mults.reserve(s.mults.size());
  for (const auto& [c, m] : s.mults) r.mults.emplace_back(perm[c], m);
  std::sort(r.mults.begin(), r.mults.end());
  return r;
}

}  // namespace spb
