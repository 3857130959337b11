#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>

#include "negfont/catalog.hpp"
#include "negfont/checks.hpp"
#include "negfont/classify.hpp"
#include "negfont/fonts.hpp"
#include "negfont/invariants.hpp"
#include "negfont/io.hpp"
#include "negfont/ptrans.hpp"

namespace py = pybind11;
using namespace negfont;

namespace {

PureState to_state(const std::vector<cplx>& amps, bool norm) {
    const std::size_t d = amps.size();
    if (d < 2 || !std::has_single_bit(d))
        throw Error(ErrorCode::DimensionMismatch, "amplitude count must be a power of two");
    const PureState s = make_state(std::countr_zero(d), amps);
    return norm ? normalize(s) : s;
}

std::vector<cplx> amps_of(const PureState& s) { return {s.amps().begin(), s.amps().end()}; }

}  // namespace

PYBIND11_MODULE(_negfont, m) {
    m.doc() = "negativity fonts and polynomial invariants";

    static py::exception<Error> exc(m, "NegfontError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    m.def("catalog_state",
          [](const std::string& name, const ParamMap& params, bool norm) {
              const PureState s = catalog_state(name, params);
              return amps_of(norm ? normalize(s) : s);
          },
          py::arg("name"), py::arg("params") = ParamMap{}, py::arg("normalize") = true);
    m.def("catalog_names", [] {
        std::vector<std::string> out;
        for (const auto& e : catalog_entries()) out.push_back(e.name);
        return out;
    });
    m.def("random_state", [](int n, std::uint64_t seed) { return amps_of(random_state(n, seed)); },
          py::arg("n"), py::arg("seed"));
    m.def("scramble",
          [](const std::vector<cplx>& a, std::uint64_t seed) {
              PureState s = to_state(a, false);
              for (int q = 1; q <= s.n_qubits(); ++q)
                  s = apply_local_unitary(s, random_special_unitary(derive_seed(seed, static_cast<std::uint64_t>(q)), q));
              return amps_of(s);
          },
          py::arg("amps"), py::arg("seed"));

    m.def("i4", [](const std::vector<cplx>& a, bool n) { return i4(to_state(a, n)); }, py::arg("amps"),
          py::arg("normalize") = true);
    m.def("i48", [](const std::vector<cplx>& a, bool n) { return i48(to_state(a, n)); }, py::arg("amps"),
          py::arg("normalize") = true);
    m.def("j12", [](const std::vector<cplx>& a, bool n) { return j12(to_state(a, n)); }, py::arg("amps"),
          py::arg("normalize") = true);
    m.def("delta24", [](const std::vector<cplx>& a, bool n) { return delta24(to_state(a, n)); }, py::arg("amps"),
          py::arg("normalize") = true);
    m.def("tau48", [](const std::vector<cplx>& a, bool n) { return aggregate_invariants(to_state(a, n)).tau48; },
          py::arg("amps"), py::arg("normalize") = true);

    m.def("_invariants_json",
          [](const std::vector<cplx>& a, bool n, double tol) {
              const PureState s = to_state(a, n);
              switch (s.n_qubits()) {
                  case 2: return nlohmann::ordered_json{{"n", 2}, {"i2", i2_pair(s)}}.dump();
                  case 3: return to_json(three_qubit_report(s, tol)).dump();
                  case 4: return to_json(aggregate_invariants(s)).dump();
                  default:
                      throw Error(ErrorCode::UnsupportedArity, "invariants are defined for 2, 3 and 4 qubits");
              }
          },
          py::arg("amps"), py::arg("normalize") = true, py::arg("tol") = 1e-9);

    m.def("_classify_json",
          [](const std::vector<cplx>& a, bool font_min, std::uint64_t seed, double tol) {
              ClassifyOptions o;
              o.use_font_min = font_min;
              o.seed = seed;
              o.tol = tol;
              return to_json(classify(to_state(a, true), o)).dump();
          },
          py::arg("amps"), py::arg("font_min") = false, py::arg("seed") = 0, py::arg("tol") = 1e-9);

    m.def("font_minimize",
          [](const std::vector<cplx>& a, std::uint64_t seed, int restarts) {
              MinimizeOptions o;
              o.seed = seed;
              o.restarts = restarts;
              return amps_of(font_minimize(to_state(a, true), o).state);
          },
          py::arg("amps"), py::arg("seed") = 0, py::arg("restarts") = 32);

    m.def("font_dets",
          [](const std::vector<cplx>& a, int qubit) {
              std::vector<std::tuple<std::string, int, cplx>> out;
              for (const FontDet& f : all_font_dets(to_state(a, true), qubit))
                  out.emplace_back(f.spec.label(), f.spec.order(), f.value);
              return out;
          },
          py::arg("amps"), py::arg("qubit") = 1);
    m.def("font_counts",
          [](const std::vector<cplx>& a, int qubit, double tol) {
              const PureState s = to_state(a, true);
              std::vector<int> out;
              for (int k = 2; k <= s.n_qubits(); ++k) out.push_back(count_nonzero_fonts(s, qubit, k, tol));
              return out;
          },
          py::arg("amps"), py::arg("qubit") = 1, py::arg("tol") = 1e-9);

    m.def("negativity",
          [](const std::vector<cplx>& a, int qubit, int k) {
              const Transpose t = k == 0 ? Transpose::global() : Transpose::kway(k);
              return negativity_report(to_state(a, true), qubit, t).value;
          },
          py::arg("amps"), py::arg("qubit") = 1, py::arg("k") = 0);

    m.def("run_suite",
          [](const std::string& name, int trials, std::uint64_t seed) {
              const SuiteResult r = run_suite(name, trials, seed);
              return py::dict(py::arg("suite") = r.name, py::arg("trials") = r.trials,
                              py::arg("max_residual") = r.max_residual, py::arg("threshold") = r.threshold,
                              py::arg("passed") = r.passed());
          },
          py::arg("name"), py::arg("trials") = 100, py::arg("seed") = 0);
}
