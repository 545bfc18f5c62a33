// JSON / CSV / human renderers for labels and reports.

#include "spb/serialize.hpp"

#include <sstream>

namespace spb {

std::string tuple_to_string(const std::vector<Partition>& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += partition_to_string(t[i]);
  }
  s += "]";
  return s;
}

std::string ss_label_to_string(const SsContext& ctx, const SemisimpleLabel& s) {
  std::string out;
  for (std::size_t i = 0; i < s.mults.size(); ++i) {
    if (i) out += "*";
    out += "(" + poly_to_string(ctx.classes[s.mults[i].first].gamma) + ")^" +
           std::to_string(s.mults[i].second);
  }
  return out;
}

std::string family_to_string(Family f) {
  switch (f) {
    case Family::F0: return "unit";
    case Family::F1: return "self_dual";
    case Family::F2: return "dual_pair";
  }
  throw std::logic_error("unknown family");
}

Json json_partition(const Partition& p) {
  Json a = Json::array();
  for (int x : p) a.push_back(x);
  return a;
}

Json json_tuple(const std::vector<Partition>& t) {
  Json a = Json::array();
  for (const auto& p : t) a.push_back(json_partition(p));
  return a;
}

Json json_ss_label(const SsContext& ctx, const SemisimpleLabel& s) {
  Json a = Json::array();
  for (const auto& [classIdx, m] : s.mults) {
    Json e;
    e["gamma"] = poly_to_string(ctx.classes[classIdx].gamma);
    e["m"] = m;
    a.push_back(std::move(e));
  }
  return a;
}

Json json_block(const SsContext& ctx, const BlockLabel& b) {
  Json j;
  j["s"] = json_ss_label(ctx, b.s);
  Json cores = Json::array();
  for (const auto& c : b.cores) {
    Json e;
    e["gamma"] = poly_to_string(ctx.classes[c.classIdx].gamma);
    e["m"] = c.mult;
    e["w"] = c.weight;
    if (c.isSymbol) {
      e["core_symbol"] = symbol_to_string(c.coreSym);
    } else {
      e["core"] = partition_to_string(c.corePart);
    }
    cores.push_back(std::move(e));
  }
  j["cores"] = std::move(cores);
  j["case"] = case_to_string(b.tag);
  j["variant"] = block_variant(b);
  j["center_range"] = b.centerRange;
  return j;
}

Json json_ibr_label(const SsContext& ctx, const IBrLabel& chi) {
  Json comps = Json::array();
  for (const auto& c : chi.comps) {
    Json e;
    e["gamma"] = poly_to_string(ctx.classes[c.classIdx].gamma);
    if (c.isSymbol) {
      e["symbol"] = symbol_to_string(c.sym);
      if (c.copy.has_value()) e["copy"] = *c.copy;
    } else {
      e["partition"] = partition_to_string(c.part);
    }
    comps.push_back(std::move(e));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

Json json_weight_label(const SsContext& ctx, const WeightLabel& w) {
  Json comps = Json::array();
  for (const auto& c : w.comps) {
    Json e;
    e["gamma"] = poly_to_string(ctx.classes[c.classIdx].gamma);
    switch (c.form) {
      case WeightForm::Plain: e["form"] = "plain"; break;
      case WeightForm::Pair: e["form"] = "pair"; break;
      case WeightForm::Sym: e["form"] = "sym"; break;
    }
    e["tuple"] = tuple_to_string(c.tuple);
    if (c.form == WeightForm::Sym) e["j"] = c.j;
    comps.push_back(std::move(e));
  }
  Json j;
  j["components"] = std::move(comps);
  return j;
}

Json json_poly_classes(const SsContext& ctx) {
  Json a = Json::array();
  for (std::size_t i = 0; i < ctx.classes.size(); ++i) {
    const PolyClass& pc = ctx.classes[i];
    Json e;
    e["index"] = i;
    e["family"] = family_to_string(pc.family);
    e["gamma"] = poly_to_string(pc.gamma);
    if (pc.family == Family::F2) e["dual"] = poly_to_string(pc.gammaDual);
    e["degree"] = pc.degree;
    e["delta"] = pc.delta;
    e["eps"] = pc.epsilon;
    e["e_gamma"] = ctx.egamma[i];
    e["beta"] = ctx.beta[i];
    a.push_back(std::move(e));
  }
  return a;
}

Json json_group_report(const GroupReport& rep, bool withBlocks) {
  Json j;
  j["kind"] = kind_to_string(rep.kind);
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["ell"] = rep.ell;
  {
    Json p;
    p["e"] = rep.params.e;
    p["a"] = rep.params.a;
    p["eps"] = rep.params.eps;
    j["params"] = std::move(p);
  }
  {
    Json c;
    c["classes"] = rep.nClasses;
    c["semisimple"] = rep.nSemisimple;
    c["blocks"] = rep.nBlocks;
    c["ibr"] = rep.totalIbr;
    c["weights"] = rep.totalWeights;
    c["direct"] = rep.directTotal;
    j["counts"] = std::move(c);
  }
  {
    Json c;
    c["counts"] = rep.countsOk;
    c["bijection"] = rep.bijectionOk;
    c["partition"] = rep.partitionOk;
    c["kform"] = rep.kformOk;
    c["sylow"] = rep.sylowOk;
    j["checks"] = std::move(c);
  }
  j["partial"] = rep.partial;
  j["status"] = status_to_string(rep.overall());
  if (withBlocks) {
    SsContext ctx = make_context(rep.kind, rep.n, rep.q, rep.ell);
    Json rows = Json::array();
    for (const auto& sec : rep.sections) {
      for (const auto& b : sec.blocks) {
        Json e = json_block(ctx, b.block);
        e["n_ibr"] = b.nIbr;
        e["n_weights"] = b.nWeights;
        e["kform"] = b.kform;
        e["status"] = status_to_string(b.status);
        rows.push_back(std::move(e));
      }
    }
    j["blocks"] = std::move(rows);
  }
  return j;
}

Json json_sylow(const SylowReport& r) {
  Json j;
  j["kind"] = kind_to_string(r.kind);
  j["n"] = r.n;
  j["q"] = r.q;
  j["ell"] = r.ell;
  j["e"] = r.e;
  j["a"] = r.a;
  j["w"] = r.w;
  j["tower_exp"] = r.towerExp;
  j["factor_exp"] = r.factorExp;
  j["count_exp"] = r.countExp;
  j["center_exp"] = r.centerExp;
  j["order_exp"] = r.orderExp;
  j["order"] = group_order_decimal(r.kind, r.n, r.q);
  j["ok"] = r.ok;
  return j;
}

Json json_actions(const SsContext& ctx, const ActionReport& r) {
  Json j;
  j["kind"] = kind_to_string(ctx.kind);
  j["n"] = ctx.n;
  j["q"] = ctx.q;
  j["ell"] = ctx.ell;
  j["blocks_checked"] = r.blocksChecked;
  j["labels_checked"] = r.labelsChecked;
  {
    Json c;
    c["center"] = r.centerOk;
    c["orbits"] = r.orbitsOk;
    c["field"] = r.fieldOk;
    j["checks"] = std::move(c);
  }
  j["ok"] = r.ok();
  return j;
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
  if (!needs) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += "\"";
  return out;
}

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string group_report_csv(const std::vector<GroupReport>& reps) {
  std::ostringstream os;
  os << "kind,n,q,ell,e,a,eps,classes,semisimple,blocks,ibr,weights,direct,"
        "counts_ok,bijection_ok,partition_ok,kform_ok,sylow_ok,partial,status\n";
  for (const auto& r : reps) {
    os << kind_to_string(r.kind) << ',' << r.n << ',' << r.q << ',' << r.ell << ',' << r.params.e
       << ',' << r.params.a << ',' << r.params.eps << ',' << r.nClasses << ',' << r.nSemisimple
       << ',' << r.nBlocks << ',' << r.totalIbr << ',' << r.totalWeights << ',' << r.directTotal
       << ',' << bool_str(r.countsOk) << ',' << bool_str(r.bijectionOk) << ','
       << bool_str(r.partitionOk) << ',' << bool_str(r.kformOk) << ',' << bool_str(r.sylowOk)
       << ',' << bool_str(r.partial) << ',' << status_to_string(r.overall()) << '\n';
  }
  return os.str();
}

std::string group_report_human(const GroupReport& rep) {
  std::ostringstream os;
  os << kind_to_string(rep.kind) << " n=" << rep.n << " q=" << rep.q << " ell=" << rep.ell
     << ": e=" << rep.params.e << " eps=" << (rep.params.eps > 0 ? "+1" : "-1")
     << " a=" << rep.params.a << " classes=" << rep.nClasses << '\n';
  os << "  semisimple=" << rep.nSemisimple << " blocks=" << rep.nBlocks
     << " ibr=" << rep.totalIbr << " weights=" << rep.totalWeights
     << " direct=" << rep.directTotal << '\n';
  auto line = [&os](bool ok, const char* what) {
    os << (ok ? "  [ok]   " : "  [FAIL] ") << what << '\n';
  };
  line(rep.countsOk, "per-block label counts match");
  line(rep.bijectionOk, "per-block quotient bijection");
  line(rep.partitionOk, "blocks partition the label set");
  line(rep.kformOk, "tower recount of weights");
  line(rep.sylowOk, "sylow exponent identities");
  if (rep.partial) os << "  [FAIL] run interrupted by the time budget\n";
  os << "  status: " << status_to_string(rep.overall()) << '\n';
  return os.str();
}

std::string sylow_csv(const std::vector<SylowReport>& rows) {
  std::ostringstream os;
  os << "kind,n,q,ell,e,a,w,tower_exp,factor_exp,count_exp,center_exp,order_exp,order,ok\n";
  for (const auto& r : rows) {
    os << kind_to_string(r.kind) << ',' << r.n << ',' << r.q << ',' << r.ell << ',' << r.e << ','
       << r.a << ',' << r.w << ',' << r.towerExp << ',' << r.factorExp << ',' << r.countExp << ','
       << r.centerExp << ',' << r.orderExp << ',' << group_order_decimal(r.kind, r.n, r.q) << ','
       << bool_str(r.ok) << '\n';
  }
  return os.str();
}

std::string sylow_human(const SylowReport& r) {
  std::ostringstream os;
  os << kind_to_string(r.kind) << " n=" << r.n << " q=" << r.q << " ell=" << r.ell
     << ": |G| = " << group_order_decimal(r.kind, r.n, r.q) << '\n';
  os << "  e=" << r.e << " a=" << r.a << " w=" << r.w << '\n';
  os << "  tower=" << r.towerExp << " factor=" << r.factorExp << " count=" << r.countExp
     << " center=" << r.centerExp << " order=" << r.orderExp << '\n';
  os << (r.ok ? "  [ok]   " : "  [FAIL] ") << "exponents agree\n";
  return os.str();
}

}  // namespace spb
