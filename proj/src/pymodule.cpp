// Thin Python bindings: partition / symbol calculators on native lists, and
// the heavier group-level entry points returning JSON strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spb/serialize.hpp"

namespace py = pybind11;

namespace {

spb::HookKind mode_of(const std::string& s) {
  if (s == "hook") return spb::HookKind::Hook;
  if (s == "cohook") return spb::HookKind::Cohook;
  throw std::invalid_argument("mode must be hook or cohook");
}

}  // namespace

PYBIND11_MODULE(sympblocks, m) {
  m.doc() =
      "exact block / Brauer-label / weight bookkeeping for finite symplectic "
      "groups at odd non-defining primes";

  m.def("e_core", [](const spb::Partition& la, int e) { return spb::e_core(la, e); },
        py::arg("partition"), py::arg("e"), "e-core of a partition");
  m.def("e_quotient", [](const spb::Partition& la, int e) { return spb::e_quotient(la, e); },
        py::arg("partition"), py::arg("e"), "e-quotient tuple of a partition");
  m.def("compose",
        [](const spb::Partition& core, const std::vector<spb::Partition>& quot, int e) {
          return spb::compose(core, quot, e);
        },
        py::arg("core"), py::arg("quotient"), py::arg("e"),
        "rebuild a partition from its e-core and e-quotient");

  m.def("symbol_core",
        [](const std::string& sym, int e, const std::string& mode) {
          return spb::symbol_to_string(
              spb::symbol_core(spb::symbol_from_string(sym), e, mode_of(mode)));
        },
        py::arg("symbol"), py::arg("e"), py::arg("mode") = "hook",
        "e-core of a symbol given as a canonical string like [[0,2],[1]]");
  m.def("symbol_quotients",
        [](const std::string& sym, int e, const std::string& mode) {
          std::vector<std::vector<spb::Partition>> out;
          for (const auto& t :
               spb::extract_ordered_quotients(spb::symbol_from_string(sym), e, mode_of(mode)))
            out.push_back(t);
          return out;
        },
        py::arg("symbol"), py::arg("e"), py::arg("mode") = "hook",
        "ordered quotient tuple(s) of a symbol (two entries when the core is "
        "degenerate and the symbol is not)");
  m.def("compose_symbol",
        [](const std::string& core, const std::vector<spb::Partition>& quot, int e,
           const std::string& mode) {
          return spb::symbol_to_string(
              spb::compose_symbol(spb::symbol_from_string(core), quot, e, mode_of(mode)).symbol);
        },
        py::arg("core"), py::arg("quotient"), py::arg("e"), py::arg("mode") = "hook",
        "rebuild a symbol from a core symbol and a 2e-entry quotient tuple");

  m.def("group_order",
        [](const std::string& kind, int n, int q) {
          return spb::group_order_decimal(spb::kind_from_string(kind), n, q);
        },
        py::arg("kind"), py::arg("n"), py::arg("q"),
        "group order as a decimal string; kind is Sp, CSp, or SO_odd");

  m.def("sylow",
        [](const std::string& kind, int n, int q, int ell) {
          return spb::render_json(
              spb::json_sylow(spb::sylow_check(spb::kind_from_string(kind), n, q, ell)));
        },
        py::arg("kind"), py::arg("n"), py::arg("q"), py::arg("ell"),
        "Sylow exponent identity report as a JSON string");

  m.def("classes",
        [](const std::string& kind, int n, int q, int ell) {
          spb::SsContext ctx = spb::make_context(spb::kind_from_string(kind), n, q, ell);
          return spb::render_json(spb::json_poly_classes(ctx));
        },
        py::arg("kind"), py::arg("n"), py::arg("q"), py::arg("ell"),
        "eigenvalue-polynomial classes as a JSON string");

  m.def("blocks",
        [](const std::string& kind, int n, int q, int ell) {
          spb::SsContext ctx = spb::make_context(spb::kind_from_string(kind), n, q, ell);
          spb::Json rows = spb::Json::array();
          auto bl = spb::enumerate_blocks(ctx);
          for (std::size_t i = 0; i < bl.size(); ++i) {
            spb::Json e = spb::json_block(ctx, bl[i]);
            e["index"] = i;
            e["n_ibr"] = spb::count_ibr(ctx, bl[i]);
            e["n_weights"] = spb::count_weights(ctx, bl[i]);
            rows.push_back(std::move(e));
          }
          return spb::render_json(rows);
        },
        py::arg("kind"), py::arg("n"), py::arg("q"), py::arg("ell"),
        "block list with label counts as a JSON string");

  m.def("verify",
        [](const std::string& kind, int n, int q, int ell, int jobs, double timeBudget) {
          auto rep = spb::verify_group(spb::kind_from_string(kind), n, q, ell, jobs, timeBudget);
          return spb::render_json(spb::json_group_report(rep, false));
        },
        py::arg("kind"), py::arg("n"), py::arg("q"), py::arg("ell"), py::arg("jobs") = 1,
        py::arg("time_budget") = 0.0, "verification report for one point as a JSON string");
}
