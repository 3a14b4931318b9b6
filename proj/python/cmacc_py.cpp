// Python bindings. Exact values cross the boundary as Python ints and
// fractions.Fraction; reports and parameter bundles become dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "cmacc/baselines.hpp"
#include "cmacc/cli.hpp"
#include "cmacc/macc.hpp"
#include "cmacc/optimizer.hpp"
#include "cmacc/packing.hpp"
#include "cmacc/pda.hpp"
#include "cmacc/text_format.hpp"

namespace py = pybind11;
using namespace cmacc;

namespace {

py::object py_int(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

py::object py_fraction(const Rational& r) {
  return py::module_::import("fractions")
      .attr("Fraction")(py_int(boost::multiprecision::numerator(r)), py_int(boost::multiprecision::denominator(r)));
}

py::dict report_dict(const VerificationReport& report) {
  py::list violations;
  for (const Violation& v : report.violations) {
    violations.append(py::dict(py::arg("kind") = std::string(to_string(v.kind)), py::arg("witness") = v.witness,
                               py::arg("detail") = v.detail));
  }
  py::list runs;
  for (const CyclicRun& r : report.runs) runs.append(py::make_tuple(r.start.value, r.length));
  return py::dict(py::arg("valid") = report.valid(), py::arg("violations") = violations, py::arg("runs") = runs);
}

py::dict trace_dict(const ConstructionTrace& t) {
  return py::dict(py::arg("f") = t.f, py::arg("g") = t.g_off, py::arg("x") = t.x, py::arg("phi") = t.phi,
                  py::arg("v_min") = t.v_min);
}

py::dict params_dict(const PdaParams& p) {
  return py::dict(py::arg("K") = p.K, py::arg("F") = p.F, py::arg("Z") = p.Z, py::arg("S") = p.S,
                  py::arg("gain") = p.max_gain());
}

py::dict scheme_dict(const SchemeParams& p) {
  return py::dict(py::arg("K") = p.K, py::arg("F") = p.F, py::arg("Z") = p.Z, py::arg("S") = p.S,
                  py::arg("L") = p.L, py::arg("memory_ratio") = py_fraction(p.memory_ratio),
                  py::arg("memory") = py_fraction(p.memory), py::arg("rate") = py_fraction(p.rate),
                  py::arg("gain") = p.gain);
}

py::object candidate_obj(const std::optional<Candidate>& c) {
  if (!c) return py::none();
  return py::dict(py::arg("m") = c->m.m, py::arg("objective") = c->objective, py::arg("trace") = trace_dict(c->trace),
                  py::arg("verified") = c->verified);
}

py::dict point_dict(const BaselinePoint& p) {
  return py::dict(py::arg("scheme") = p.scheme, py::arg("K") = p.K, py::arg("L") = p.L,
                  py::arg("t") = p.t ? py::cast(*p.t) : py::none(),
                  py::arg("memory_ratio") = py_fraction(p.memory_ratio),
                  py::arg("F") = p.F ? py_int(*p.F) : py::none(), py::arg("R") = p.R ? py_fraction(*p.R) : py::none(),
                  py::arg("rate_is_lower_bound") = p.rate_is_lower_bound, py::arg("applicable") = p.applicable,
                  py::arg("note") = p.note);
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Multi-access coded caching from non-half-sum disjoint packings";

  py::class_<PackingFamily>(mod, "PackingFamily")
      .def(py::init(&PackingFamily::from_integers), py::arg("v"), py::arg("blocks"))
      .def_property_readonly("modulus", &PackingFamily::modulus)
      .def_property_readonly("block_count", &PackingFamily::block_count)
      .def_property_readonly("block_size", &PackingFamily::block_size)
      .def_property_readonly("blocks",
                             [](const PackingFamily& f) {
                               std::vector<std::vector<std::int64_t>> out;
                               for (const Block& b : f.blocks()) {
                                 auto& row = out.emplace_back();
                                 for (Residue r : b.elements) row.push_back(r.value);
                               }
                               return out;
                             })
      .def("ground_set",
           [](const PackingFamily& f) {
             std::vector<std::int64_t> out;
             for (Residue r : f.ground_set()) out.push_back(r.value);
             return out;
           })
      .def("to_text", [](const PackingFamily& f, std::int64_t L) { return to_text(f, L); }, py::arg("L"))
      .def("label", &parameter_label, py::arg("L"));

  py::class_<PdaArray>(mod, "PdaArray")
      .def_property_readonly("rows", &PdaArray::rows)
      .def_property_readonly("cols", &PdaArray::cols)
      .def(
          "entry",
          [](const PdaArray& a, std::int64_t f, std::int64_t k) -> py::object {
            const PdaEntry& e = a.at(f, k);
            if (e.is_star()) return py::none();
            if (e.kind == PdaEntry::Kind::Pair) return py::make_tuple(e.first, e.second);
            return py::cast(e.first);
          },
          py::arg("f"), py::arg("k"), "None for a star, (c, i) for a pair symbol, int for an opaque one")
      .def("to_text", [](const PdaArray& a) { return to_text(a); })
      .def("__eq__", [](const PdaArray& a, const PdaArray& b) { return a == b; });

  mod.def(
      "derive_trace", [](std::int64_t L, std::vector<std::int64_t> m) { return trace_dict(derive_trace({L, m})); },
      py::arg("L"), py::arg("m"));
  mod.def(
      "construct_family",
      [](std::int64_t L, std::vector<std::int64_t> m, std::optional<std::int64_t> v) {
        const MVector mv{L, std::move(m)};
        return v ? construct_family(mv, *v) : construct_family(mv);
      },
      py::arg("L"), py::arg("m"), py::arg("v") = py::none());
  mod.def("verify_nhsdp", [](const PackingFamily& f) { return report_dict(verify_nhsdp(f)); });
  mod.def(
      "verify_cma", [](const PackingFamily& f, std::int64_t L) { return report_dict(verify_cma(f, L)); },
      py::arg("family"), py::arg("L"));
  mod.def("read_packing", [](const std::string& text) {
    std::istringstream in(text);
    PackingFile pf = read_packing(in);
    return py::make_tuple(pf.family, pf.L);
  });

  mod.def("build_pda", &build_pda);
  mod.def("verify_pda", [](const PdaArray& a) { return report_dict(verify_pda(a)); });
  mod.def(
      "verify_l_continuity",
      [](const PdaArray& a, std::int64_t L) { return report_dict(verify_l_continuity(a, L)); }, py::arg("array"),
      py::arg("L"));
  mod.def("pda_params", [](const PdaArray& a) { return params_dict(compute_params(a)); });
  mod.def("read_pda", [](const std::string& text) {
    std::istringstream in(text);
    return read_pda(in);
  });

  mod.def(
      "scheme_params",
      [](const PackingFamily& f, std::int64_t L, std::int64_t N) {
        return scheme_dict(scheme_params(MaccScheme::from_family(f, L), N));
      },
      py::arg("family"), py::arg("L"), py::arg("N"));
  mod.def(
      "simulate",
      [](const PdaArray& Q, std::int64_t L, std::int64_t N, std::size_t file_size, std::uint64_t seed,
         std::optional<std::vector<std::int64_t>> demands) {
        const MaccScheme scheme = MaccScheme::from_delivery_array(Q, L);
        const Library lib = Library::synthetic(N, file_size, scheme.params().F, seed);
        const DemandVector d = demands ? DemandVector{*demands} : DemandVector::distinct(scheme.real_users(), N);
        const DeliveryTranscript tx = deliver(scheme, lib, d);
        const std::vector<Bytes> decoded = decode_all(scheme, lib, d, tx);
        std::int64_t ok = 0;
        for (std::size_t k = 0; k < decoded.size(); ++k) ok += decoded[k] == lib.original(d.d[k]) ? 1 : 0;
        return py::dict(py::arg("decoded_ok") = ok, py::arg("users") = scheme.real_users(), py::arg("S_d") = tx.S_d,
                        py::arg("rate") = py_fraction(tx.rate));
      },
      py::arg("pda"), py::arg("L"), py::arg("N"), py::arg("file_size"), py::arg("seed"),
      py::arg("demands") = py::none());

  mod.def(
      "brute_force",
      [](std::int64_t v, std::int64_t L, std::int64_t n) { return candidate_obj(brute_force({v, L, n})); },
      py::arg("v"), py::arg("L"), py::arg("n"));
  mod.def(
      "closed_form",
      [](std::int64_t v, std::int64_t L, std::int64_t n) -> py::object {
        const auto cf = closed_form(v, L, n);
        if (!cf) return py::none();
        return py::dict(py::arg("q") = cf->q, py::arg("m") = cf->m.m, py::arg("objective") = cf->objective,
                        py::arg("K") = cf->K, py::arg("F") = cf->F, py::arg("Z") = cf->Z, py::arg("S") = py_int(cf->S),
                        py::arg("memory_ratio") = py_fraction(cf->memory_ratio),
                        py::arg("rate") = py_fraction(cf->rate));
      },
      py::arg("v"), py::arg("L"), py::arg("n"));

  mod.def("eval_hkd", [](std::int64_t K, std::int64_t L, std::int64_t t) { return point_dict(eval_hkd(K, L, t)); });
  mod.def("eval_rk1", [](std::int64_t K, std::int64_t L, std::int64_t t) { return point_dict(eval_rk1(K, L, t)); });
  mod.def("eval_cw", [](std::int64_t K, std::int64_t L, std::int64_t t) { return point_dict(eval_cw(K, L, t)); });
  mod.def("eval_wcwl", [](std::int64_t K, std::int64_t L, std::int64_t t) { return point_dict(eval_wcwl(K, L, t)); });
  mod.def("eval_sr2", [](std::int64_t K, std::int64_t L, std::int64_t t) { return point_dict(eval_sr2(K, L, t)); });
  mod.def("eval_mr", [](std::int64_t K, std::int64_t L) { return point_dict(eval_mr(K, L)); });
  mod.def("eval_spe", [](std::int64_t K, std::int64_t L) { return point_dict(eval_spe(K, L)); });
  mod.def(
      "our_points",
      [](std::int64_t K, std::int64_t L, std::int64_t n_max) {
        py::list out;
        for (const BaselinePoint& p : our_points(K, L, n_max)) out.append(point_dict(p));
        return out;
      },
      py::arg("K"), py::arg("L"), py::arg("n_max") = 3);

  mod.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Run a cmacc subcommand in-process; returns (exit_code, stdout, stderr).");
}
