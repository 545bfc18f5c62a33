// sympblocks — exact block / Brauer-label / weight bookkeeping for finite
// symplectic and conformal symplectic groups at odd non-defining primes.
//
// Subcommands:
//   verify    run the full per-point verification battery over a grid
//   blocks    list the blocks of one (kind, n, q, ell) point
//   ibr       list irreducible-Brauer labels (per block or all)
//   weights   list weight labels (per block or all)
//   polys     list the eigenvalue-polynomial classes of one point
//   actions   check center / field action compatibility of one point
//   sylow     Sylow exponent identities and group orders over a grid
//   core      e-core of a partition or symbol
//   quotient  e-quotient tuple(s) of a partition or symbol
//   compose   rebuild a partition or symbol from a core and quotient tuple
//
// Exit codes: 0 = success / all checks passed; 1 = a check failed or a time
// budget cut a run short; 2 = invalid arguments or unsupported input.
//
// Grid options (verify, sylow) accept "4", "3,5,7", or "2..4".  All payload
// output is deterministic; timing goes to stderr only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spb/serialize.hpp"

namespace {

using spb::Json;

// "4" | "3,5,7" | "2..4"  ->  sorted unique values.
std::vector<int> parse_grid(const std::string& s) {
  std::vector<int> out;
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    int lo = std::stoi(s.substr(0, dots));
    int hi = std::stoi(s.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + s);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument("bad grid value: " + s);
      out.push_back(std::stoi(item));
    }
  }
  if (out.empty()) throw std::invalid_argument("empty grid: " + s);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// "[[2],[],[1,1]]" -> tuple of partitions.
std::vector<spb::Partition> tuple_from_string(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw std::invalid_argument("tuple must look like [[2],[],[1,1]]");
  std::string inner = t.substr(1, t.size() - 2);
  std::vector<spb::Partition> out;
  std::size_t i = 0;
  while (i < inner.size()) {
    if (inner[i] == ',') {
      ++i;
      continue;
    }
    if (inner[i] != '[') throw std::invalid_argument("tuple must contain bracketed partitions");
    int depth = 0;
    std::size_t j = i;
    for (; j < inner.size(); ++j) {
      if (inner[j] == '[') ++depth;
      if (inner[j] == ']' && --depth == 0) break;
    }
    if (depth != 0) throw std::invalid_argument("unbalanced brackets in tuple");
    out.push_back(spb::partition_from_string(inner.substr(i, j - i + 1)));
    i = j + 1;
  }
  return out;
}

spb::HookKind mode_from_string(const std::string& s) {
  if (s == "hook") return spb::HookKind::Hook;
  if (s == "cohook") return spb::HookKind::Cohook;
  throw std::invalid_argument("mode must be hook or cohook");
}

void emit(const std::string& payload, const std::string& outPath) {
  if (outPath.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(outPath, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + outPath);
  f << payload;
}

std::string ibr_label_string(const spb::SsContext& ctx, const spb::IBrLabel& chi) {
  std::string s;
  for (std::size_t i = 0; i < chi.comps.size(); ++i) {
    const auto& c = chi.comps[i];
    if (i) s += ";";
    s += "(" + spb::poly_to_string(ctx.classes[c.classIdx].gamma) + ")";
    if (c.isSymbol) {
      s += spb::symbol_to_string(c.sym);
      if (c.copy.has_value()) s += "#" + std::to_string(*c.copy);
    } else {
      s += spb::partition_to_string(c.part);
    }
  }
  return s;
}

std::string weight_label_string(const spb::SsContext& ctx, const spb::WeightLabel& w) {
  std::string s;
  for (std::size_t i = 0; i < w.comps.size(); ++i) {
    const auto& c = w.comps[i];
    if (i) s += ";";
    s += "(" + spb::poly_to_string(ctx.classes[c.classIdx].gamma) + ")";
    switch (c.form) {
      case spb::WeightForm::Plain: s += "plain"; break;
      case spb::WeightForm::Pair: s += "pair"; break;
      case spb::WeightForm::Sym: s += "sym" + std::to_string(c.j); break;
    }
    s += spb::tuple_to_string(c.tuple);
  }
  return s;
}

struct PointArgs {
  std::string kind = "CSp";
  int n = 0, q = 0, ell = 0;
};

void add_point_options(CLI::App* cmd, PointArgs& p) {
  cmd->add_option("--kind,--group", p.kind, "group kind: Sp | CSp | SO_odd")
      ->capture_default_str();
  cmd->add_option("--n", p.n, "rank n (>= 2)")->required();
  cmd->add_option("--q", p.q, "field size q")->required();
  cmd->add_option("--ell", p.ell, "odd prime ell, not dividing q")->required();
}

int run_verify(const std::string& kindStr, const std::string& nGrid, const std::string& qGrid,
               const std::string& ellGrid, int jobs, double budget, const std::string& format,
               bool withBlocks, const std::string& outPath) {
  spb::GroupKind kind = spb::kind_from_string(kindStr);
  auto ns = parse_grid(nGrid), qs = parse_grid(qGrid), ells = parse_grid(ellGrid);
  std::vector<spb::GroupReport> reps;
  for (int n : ns)
    for (int q : qs)
      for (int ell : ells) {
        if (q % ell == 0) {
          std::cerr << "skipping n=" << n << " q=" << q << " ell=" << ell
                    << " (ell divides q)\n";
          continue;
        }
        reps.push_back(spb::verify_group(kind, n, q, ell, jobs, budget));
      }
  if (reps.empty()) throw std::invalid_argument("no valid grid points");

  std::string payload;
  if (format == "json") {
    Json doc = spb::envelope("verify");
    Json pts = Json::array();
    for (const auto& r : reps) pts.push_back(spb::json_group_report(r, withBlocks));
    doc["points"] = std::move(pts);
    payload = spb::render_json(doc);
  } else if (format == "csv") {
    payload = spb::group_report_csv(reps);
  } else if (format == "human") {
    for (const auto& r : reps) payload += spb::group_report_human(r);
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  for (const auto& r : reps)
    if (r.overall() != spb::CheckStatus::Ok) return 1;
  return 0;
}

int run_sylow(const std::string& kindStr, const std::string& nGrid, const std::string& qGrid,
              const std::string& ellGrid, const std::string& format, const std::string& outPath) {
  spb::GroupKind kind = spb::kind_from_string(kindStr);
  auto ns = parse_grid(nGrid), qs = parse_grid(qGrid), ells = parse_grid(ellGrid);
  std::vector<spb::SylowReport> rows;
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    for (int q : qs)
      for (int ell : ells) {
        if (q % ell == 0) {
          std::cerr << "skipping n=" << n << " q=" << q << " ell=" << ell
                    << " (ell divides q)\n";
          continue;
        }
        rows.push_back(spb::sylow_check(kind, n, q, ell));
      }
  }
  if (rows.empty()) throw std::invalid_argument("no valid grid points");

  std::string payload;
  if (format == "json") {
    Json doc = spb::envelope("sylow");
    Json pts = Json::array();
    for (const auto& r : rows) pts.push_back(spb::json_sylow(r));
    doc["points"] = std::move(pts);
    payload = spb::render_json(doc);
  } else if (format == "csv") {
    payload = spb::sylow_csv(rows);
  } else if (format == "human") {
    for (const auto& r : rows) payload += spb::sylow_human(r);
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  for (const auto& r : rows)
    if (!r.ok) return 1;
  return 0;
}

int run_blocks(const PointArgs& p, const std::string& format, const std::string& outPath) {
  spb::SsContext ctx = spb::make_context(spb::kind_from_string(p.kind), p.n, p.q, p.ell);
  auto blocks = spb::enumerate_blocks(ctx);
  std::string payload;
  if (format == "json") {
    Json doc = spb::envelope("blocks");
    doc["kind"] = p.kind;
    doc["n"] = p.n;
    doc["q"] = p.q;
    doc["ell"] = p.ell;
    Json rows = Json::array();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Json e = spb::json_block(ctx, blocks[i]);
      e["index"] = i;
      e["n_ibr"] = spb::count_ibr(ctx, blocks[i]);
      e["n_weights"] = spb::count_weights(ctx, blocks[i]);
      rows.push_back(std::move(e));
    }
    doc["blocks"] = std::move(rows);
    payload = spb::render_json(doc);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "index,s,case,variant,center_range,n_ibr,n_weights\n";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      os << i << ',' << spb::csv_escape(spb::ss_label_to_string(ctx, blocks[i].s)) << ','
         << spb::case_to_string(blocks[i].tag) << ',' << spb::block_variant(blocks[i]) << ','
         << blocks[i].centerRange << ',' << spb::count_ibr(ctx, blocks[i]) << ','
         << spb::count_weights(ctx, blocks[i]) << '\n';
    }
    payload = os.str();
  } else if (format == "human") {
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      os << '#' << i << " s=" << spb::ss_label_to_string(ctx, blocks[i].s)
         << " case=" << spb::case_to_string(blocks[i].tag)
         << " variant=" << spb::block_variant(blocks[i]) << " center=" << blocks[i].centerRange
         << " ibr=" << spb::count_ibr(ctx, blocks[i])
         << " weights=" << spb::count_weights(ctx, blocks[i]) << '\n';
    }
    payload = os.str();
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return 0;
}

int run_labels(const PointArgs& p, long long blockIdx, bool wantWeights,
               const std::string& format, const std::string& outPath) {
  spb::SsContext ctx = spb::make_context(spb::kind_from_string(p.kind), p.n, p.q, p.ell);
  auto blocks = spb::enumerate_blocks(ctx);
  if (blockIdx >= static_cast<long long>(blocks.size()))
    throw std::invalid_argument("block index out of range");
  std::size_t lo = (blockIdx < 0) ? 0 : static_cast<std::size_t>(blockIdx);
  std::size_t hi = (blockIdx < 0) ? blocks.size() : static_cast<std::size_t>(blockIdx) + 1;

  const char* cmd = wantWeights ? "weights" : "ibr";
  std::string payload;
  if (format == "json") {
    Json doc = spb::envelope(cmd);
    doc["kind"] = p.kind;
    doc["n"] = p.n;
    doc["q"] = p.q;
    doc["ell"] = p.ell;
    Json rows = Json::array();
    for (std::size_t i = lo; i < hi; ++i) {
      if (wantWeights) {
        for (const auto& w : spb::enumerate_weights(ctx, blocks[i])) {
          Json e = spb::json_weight_label(ctx, w);
          e["block_index"] = i;
          rows.push_back(std::move(e));
        }
      } else {
        for (const auto& chi : spb::enumerate_ibr(ctx, blocks[i])) {
          Json e = spb::json_ibr_label(ctx, chi);
          e["block_index"] = i;
          rows.push_back(std::move(e));
        }
      }
    }
    doc["labels"] = std::move(rows);
    payload = spb::render_json(doc);
  } else if (format == "csv" || format == "human") {
    std::ostringstream os;
    if (format == "csv") os << "block_index,label\n";
    for (std::size_t i = lo; i < hi; ++i) {
      if (wantWeights) {
        for (const auto& w : spb::enumerate_weights(ctx, blocks[i])) {
          std::string s = weight_label_string(ctx, w);
          if (format == "csv") os << i << ',' << spb::csv_escape(s) << '\n';
          else os << '#' << i << ' ' << s << '\n';
        }
      } else {
        for (const auto& chi : spb::enumerate_ibr(ctx, blocks[i])) {
          std::string s = ibr_label_string(ctx, chi);
          if (format == "csv") os << i << ',' << spb::csv_escape(s) << '\n';
          else os << '#' << i << ' ' << s << '\n';
        }
      }
    }
    payload = os.str();
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return 0;
}

int run_polys(const PointArgs& p, const std::string& format, const std::string& outPath) {
  spb::SsContext ctx = spb::make_context(spb::kind_from_string(p.kind), p.n, p.q, p.ell);
  std::string payload;
  if (format == "json") {
    Json doc = spb::envelope("polys");
    doc["kind"] = p.kind;
    doc["n"] = p.n;
    doc["q"] = p.q;
    doc["ell"] = p.ell;
    Json params;
    params["e"] = ctx.params.e;
    params["a"] = ctx.params.a;
    params["eps"] = ctx.params.eps;
    doc["params"] = std::move(params);
    doc["classes"] = spb::json_poly_classes(ctx);
    payload = spb::render_json(doc);
  } else if (format == "csv") {
    std::ostringstream os;
    os << "index,family,gamma,dual,degree,delta,eps,e_gamma,beta\n";
    for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
      const auto& pc = ctx.classes[i];
      os << i << ',' << spb::family_to_string(pc.family) << ','
         << spb::csv_escape(spb::poly_to_string(pc.gamma)) << ','
         << (pc.family == spb::Family::F2 ? spb::csv_escape(spb::poly_to_string(pc.gammaDual))
                                          : std::string())
         << ',' << pc.degree << ',' << pc.delta << ',' << pc.epsilon << ',' << ctx.egamma[i]
         << ',' << ctx.beta[i] << '\n';
    }
    payload = os.str();
  } else if (format == "human") {
    std::ostringstream os;
    for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
      const auto& pc = ctx.classes[i];
      os << '#' << i << ' ' << spb::family_to_string(pc.family) << ' '
         << spb::poly_to_string(pc.gamma);
      if (pc.family == spb::Family::F2) os << " ~ " << spb::poly_to_string(pc.gammaDual);
      os << " deg=" << pc.degree << " delta=" << pc.delta << " eps=" << pc.epsilon
         << " e=" << ctx.egamma[i] << " beta=" << ctx.beta[i] << '\n';
    }
    payload = os.str();
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return 0;
}

int run_actions(const PointArgs& p, const std::string& format, const std::string& outPath) {
  spb::SsContext ctx = spb::make_context(spb::kind_from_string(p.kind), p.n, p.q, p.ell);
  spb::ActionReport r = spb::check_actions(ctx);
  std::string payload;
  if (format == "json") {
    Json doc = spb::envelope("actions");
    Json body = spb::json_actions(ctx, r);
    for (auto& [k, v] : body.items()) doc[k] = v;
    payload = spb::render_json(doc);
  } else if (format == "human") {
    std::ostringstream os;
    os << p.kind << " n=" << p.n << " q=" << p.q << " ell=" << p.ell << ": blocks="
       << r.blocksChecked << " labels=" << r.labelsChecked << '\n';
    os << (r.centerOk ? "  [ok]   " : "  [FAIL] ") << "center action commutes\n";
    os << (r.orbitsOk ? "  [ok]   " : "  [FAIL] ") << "orbit sizes as predicted\n";
    os << (r.fieldOk ? "  [ok]   " : "  [FAIL] ") << "field action commutes\n";
    payload = os.str();
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return r.ok() ? 0 : 1;
}

int run_core(const std::string& partStr, const std::string& symStr, int e,
             const std::string& modeStr, const std::string& format, const std::string& outPath) {
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  if (partStr.empty() == symStr.empty())
    throw std::invalid_argument("give exactly one of --partition / --symbol");
  std::string result;
  if (!partStr.empty()) {
    result = spb::partition_to_string(spb::e_core(spb::partition_from_string(partStr), e));
  } else {
    result = spb::symbol_to_string(
        spb::symbol_core(spb::symbol_from_string(symStr), e, mode_from_string(modeStr)));
  }
  std::string payload;
  if (format == "human") {
    payload = result + "\n";
  } else if (format == "json") {
    Json doc = spb::envelope("core");
    doc["e"] = e;
    if (!partStr.empty()) doc["partition"] = partStr;
    else {
      doc["symbol"] = symStr;
      doc["mode"] = modeStr;
    }
    doc["result"] = result;
    payload = spb::render_json(doc);
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return 0;
}

int run_quotient(const std::string& partStr, const std::string& symStr, int e,
                 const std::string& modeStr, const std::string& format,
                 const std::string& outPath) {
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  if (partStr.empty() == symStr.empty())
    throw std::invalid_argument("give exactly one of --partition / --symbol");
  std::vector<std::string> results;
  if (!partStr.empty()) {
    results.push_back(spb::tuple_to_string(spb::e_quotient(spb::partition_from_string(partStr), e)));
  } else {
    for (const auto& t : spb::extract_ordered_quotients(spb::symbol_from_string(symStr), e,
                                                        mode_from_string(modeStr)))
      results.push_back(spb::tuple_to_string(t));
  }
  std::string payload;
  if (format == "human") {
    for (const auto& r : results) payload += r + "\n";
  } else if (format == "json") {
    Json doc = spb::envelope("quotient");
    doc["e"] = e;
    if (!partStr.empty()) doc["partition"] = partStr;
    else {
      doc["symbol"] = symStr;
      doc["mode"] = modeStr;
    }
    Json arr = Json::array();
    for (const auto& r : results) arr.push_back(r);
    doc["results"] = std::move(arr);
    payload = spb::render_json(doc);
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return 0;
}

int run_compose(const std::string& coreStr, const std::string& coreSymStr,
                const std::string& quotStr, int e, const std::string& modeStr, int copyArg,
                const std::string& format, const std::string& outPath) {
  if (e < 1) throw std::invalid_argument("e must be at least 1");
  if (coreStr.empty() == coreSymStr.empty())
    throw std::invalid_argument("give exactly one of --core / --core-symbol");
  auto quot = tuple_from_string(quotStr);
  std::string result;
  std::optional<int> copyOut;
  if (!coreStr.empty()) {
    if (static_cast<int>(quot.size()) != e)
      throw std::invalid_argument("partition quotient needs exactly e entries");
    result = spb::partition_to_string(spb::compose(spb::partition_from_string(coreStr), quot, e));
  } else {
    std::optional<int> copy;
    if (copyArg >= 0) copy = copyArg;
    auto composed = spb::compose_symbol(spb::symbol_from_string(coreSymStr), quot, e,
                                        mode_from_string(modeStr), copy);
    result = spb::symbol_to_string(composed.symbol);
    copyOut = composed.copy;
  }
  std::string payload;
  if (format == "human") {
    payload = result + "\n";
  } else if (format == "json") {
    Json doc = spb::envelope("compose");
    doc["e"] = e;
    if (!coreStr.empty()) doc["core"] = coreStr;
    else {
      doc["core_symbol"] = coreSymStr;
      doc["mode"] = modeStr;
    }
    doc["quotient"] = quotStr;
    doc["result"] = result;
    if (copyOut.has_value()) doc["copy"] = *copyOut;
    payload = spb::render_json(doc);
  } else {
    throw std::invalid_argument("unsupported format: " + format);
  }
  emit(payload, outPath);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact block / Brauer-label / weight bookkeeping for finite symplectic groups "
      "at odd non-defining primes"};
  app.require_subcommand(1);

  std::function<int()> runner;

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "run the verification battery over a grid");
    auto kind = std::make_shared<std::string>("CSp");
    auto nG = std::make_shared<std::string>(), qG = std::make_shared<std::string>(),
         ellG = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(0);
    auto budget = std::make_shared<double>(0.0);
    auto withBlocks = std::make_shared<bool>(false);
    cmd->add_option("--kind,--group", *kind, "group kind: Sp | CSp")->capture_default_str();
    cmd->add_option("--n", *nG, "rank grid, e.g. 2..4")->required();
    cmd->add_option("--q", *qG, "field size grid, e.g. 3,5")->required();
    cmd->add_option("--ell", *ellG, "prime grid, e.g. 3,5,7")->required();
    cmd->add_option("--jobs", *jobs, "worker threads (default: SYMPBLOCKS_JOBS or 1)");
    cmd->add_option("--time-budget", *budget, "seconds before aborting with a partial report");
    cmd->add_option("--format", *format, "json | csv | human")->capture_default_str();
    cmd->add_flag("--blocks", *withBlocks, "include per-block rows in JSON output");
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() {
        int j = *jobs;
        if (j <= 0) {
          const char* env = std::getenv("SYMPBLOCKS_JOBS");
          j = env ? std::atoi(env) : 1;
          if (j <= 0) j = 1;
        }
        return run_verify(*kind, *nG, *qG, *ellG, j, *budget, *format, *withBlocks, *out);
      };
    });
  }

  // sylow
  {
    auto* cmd = app.add_subcommand("sylow", "Sylow exponent identities over a grid");
    auto kind = std::make_shared<std::string>("CSp");
    auto nG = std::make_shared<std::string>(), qG = std::make_shared<std::string>(),
         ellG = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    cmd->add_option("--kind,--group", *kind, "group kind: Sp | CSp | SO_odd")
        ->capture_default_str();
    cmd->add_option("--n", *nG, "rank grid")->required();
    cmd->add_option("--q", *qG, "field size grid")->required();
    cmd->add_option("--ell", *ellG, "prime grid")->required();
    cmd->add_option("--format", *format, "json | csv | human")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_sylow(*kind, *nG, *qG, *ellG, *format, *out); };
    });
  }

  // blocks / ibr / weights / polys / actions share point options
  {
    auto* cmd = app.add_subcommand("blocks", "list the blocks of one point");
    auto p = std::make_shared<PointArgs>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    add_point_options(cmd, *p);
    cmd->add_option("--format", *format, "json | csv | human")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_blocks(*p, *format, *out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("ibr", "list irreducible-Brauer labels");
    auto p = std::make_shared<PointArgs>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    auto blockIdx = std::make_shared<long long>(-1);
    add_point_options(cmd, *p);
    cmd->add_option("--block", *blockIdx, "restrict to one block index");
    cmd->add_option("--format", *format, "json | csv | human")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_labels(*p, *blockIdx, false, *format, *out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("weights", "list weight labels");
    auto p = std::make_shared<PointArgs>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    auto blockIdx = std::make_shared<long long>(-1);
    add_point_options(cmd, *p);
    cmd->add_option("--block", *blockIdx, "restrict to one block index");
    cmd->add_option("--format", *format, "json | csv | human")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_labels(*p, *blockIdx, true, *format, *out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("polys", "list eigenvalue-polynomial classes");
    auto p = std::make_shared<PointArgs>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    add_point_options(cmd, *p);
    cmd->add_option("--format", *format, "json | csv | human")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_polys(*p, *format, *out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("actions", "check center / field action compatibility");
    auto p = std::make_shared<PointArgs>();
    auto format = std::make_shared<std::string>("json");
    auto out = std::make_shared<std::string>();
    add_point_options(cmd, *p);
    cmd->add_option("--format", *format, "json | human")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_actions(*p, *format, *out); };
    });
  }

  // calculators
  {
    auto* cmd = app.add_subcommand("core", "e-core of a partition or symbol");
    auto part = std::make_shared<std::string>(), sym = std::make_shared<std::string>();
    auto e = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>("hook");
    auto format = std::make_shared<std::string>("human");
    auto out = std::make_shared<std::string>();
    cmd->add_option("--partition", *part, "partition, e.g. [4,2]");
    cmd->add_option("--symbol", *sym, "symbol, e.g. [[0,2],[1]]");
    cmd->add_option("--e", *e, "step size e >= 1")->required();
    cmd->add_option("--mode", *mode, "hook | cohook (symbols only)")->capture_default_str();
    cmd->add_option("--format", *format, "human | json")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_core(*part, *sym, *e, *mode, *format, *out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("quotient", "e-quotient of a partition or symbol");
    auto part = std::make_shared<std::string>(), sym = std::make_shared<std::string>();
    auto e = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>("hook");
    auto format = std::make_shared<std::string>("human");
    auto out = std::make_shared<std::string>();
    cmd->add_option("--partition", *part, "partition, e.g. [4,2]");
    cmd->add_option("--symbol", *sym, "symbol, e.g. [[0,2],[1]]");
    cmd->add_option("--e", *e, "step size e >= 1")->required();
    cmd->add_option("--mode", *mode, "hook | cohook (symbols only)")->capture_default_str();
    cmd->add_option("--format", *format, "human | json")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_quotient(*part, *sym, *e, *mode, *format, *out); };
    });
  }
  {
    auto* cmd = app.add_subcommand("compose", "rebuild from a core and quotient tuple");
    auto core = std::make_shared<std::string>(), coreSym = std::make_shared<std::string>();
    auto quot = std::make_shared<std::string>();
    auto e = std::make_shared<int>(0);
    auto mode = std::make_shared<std::string>("hook");
    auto copy = std::make_shared<int>(-1);
    auto format = std::make_shared<std::string>("human");
    auto out = std::make_shared<std::string>();
    cmd->add_option("--core", *core, "core partition, e.g. [1]");
    cmd->add_option("--core-symbol", *coreSym, "core symbol, e.g. [[0],[]]");
    cmd->add_option("--quotient", *quot, "quotient tuple, e.g. [[1],[]]")->required();
    cmd->add_option("--e", *e, "step size e >= 1")->required();
    cmd->add_option("--mode", *mode, "hook | cohook (symbols only)")->capture_default_str();
    cmd->add_option("--copy", *copy, "copy index 0|1 (degenerate symbol composition only)");
    cmd->add_option("--format", *format, "human | json")->capture_default_str();
    cmd->add_option("--out", *out, "write the payload to a file instead of stdout");
    cmd->callback([=, &runner]() {
      runner = [=]() { return run_compose(*core, *coreSym, *quot, *e, *mode, *copy, *format, *out); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!runner) {
    std::cerr << "no subcommand selected\n";
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int rc;
  try {
    rc = runner();
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::overflow_error& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "internal error: " << ex.what() << '\n';
    return 1;
  }
  auto t1 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "elapsed: %.3fs\n",
               std::chrono::duration<double>(t1 - t0).count());
  return rc;
}
