// Python bindings. Structured results cross the boundary as JSON text and are
// decoded by the package __init__.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "negacycl/counting.hpp"
#include "negacycl/factorization.hpp"
#include "negacycl/json_io.hpp"
#include "negacycl/negacyclic.hpp"
#include "negacycl/numtheory.hpp"
#include "negacycl/selftest.hpp"

namespace py = pybind11;
using namespace negacycl;

namespace {

FieldPtr working_field(std::uint64_t p, unsigned e, Mode mode) {
  return FieldCtx::make(p, mode == Mode::Euclidean ? e : 2 * e);
}

NegacyclicCode code_from(std::uint64_t p, unsigned e, std::uint64_t n, const std::string& gen, Mode mode) {
  const FieldPtr W = working_field(p, e, mode);
  return make_code(W, n, parse_poly(W, gen));
}

}  // namespace

PYBIND11_MODULE(_negacycl, m) {
  m.doc() = "Self-reciprocal factors of x^n +- 1 and LCD negacyclic codes";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::domain_error*>(&e)) {
        PyErr_SetString(PyExc_ValueError, e.what());
      } else {
        PyErr_SetString(PyExc_RuntimeError, e.what());
      }
    }
  });

  m.def("is_good", &nt::is_good, py::arg("d"), py::arg("q"));
  m.def("is_oddly_good", &nt::is_oddly_good, py::arg("d"), py::arg("q"));
  m.def("mult_ord", &nt::mult_ord, py::arg("a"), py::arg("n"));
  m.def("euler_phi", &nt::euler_phi, py::arg("n"));

  m.def(
      "factor_json",
      [](std::uint64_t p, unsigned e, std::uint64_t n, int sign, const std::string& mode) {
        return to_json(factor_xn(FieldCtx::make(p, e), n, sign, parse_mode(mode))).dump();
      },
      py::arg("p"), py::arg("e"), py::arg("n"), py::arg("sign"), py::arg("mode"));
  m.def(
      "verify_json",
      [](const std::string& text) {
        const Verdict v = verify_report(report_from_json(Json::parse(text)));
        return py::make_tuple(v.ok, v.detail);
      },
      py::arg("report"));

  m.def("count_srim_cyclic_json", [](std::uint64_t q, std::uint64_t n) { return to_json(count_srim_cyclic(q, n)).dump(); });
  m.def("count_scrim_cyclic_json", [](std::uint64_t q, std::uint64_t n) { return to_json(count_scrim_cyclic(q, n)).dump(); });
  m.def("count_srim_negacyclic_json",
        [](std::uint64_t q, unsigned mm, std::uint64_t np) { return to_json(count_srim_negacyclic(q, mm, np)).dump(); });
  m.def("count_scrim_negacyclic_json",
        [](std::uint64_t q, unsigned mm, std::uint64_t np) { return to_json(count_scrim_negacyclic(q, mm, np)).dump(); });
  m.def("count_srim_cyclic_recursive", &count_srim_cyclic_recursive);
  m.def("count_srim_negacyclic_recursive", &count_srim_negacyclic_recursive);
  m.def("count_scrim_cyclic_recursive", &count_scrim_cyclic_recursive);
  m.def("count_scrim_negacyclic_recursive", &count_scrim_negacyclic_recursive);
  m.def("count_srim_cyclic_as_printed", &count_srim_cyclic_as_printed);
  m.def("count_srim_negacyclic_as_printed", &count_srim_negacyclic_as_printed);
  m.def("count_two_prime_srim", &count_two_prime_srim);
  m.def("count_two_prime_scrim", &count_two_prime_scrim);
  m.def(
      "classify_extreme",
      [](std::uint64_t q, std::uint64_t n, const std::string& mode) {
        const ExtremeClass c =
            parse_mode(mode) == Mode::Euclidean ? classify_extreme_srim(q, n) : classify_extreme_scrim(q, n);
        return std::string(to_string(c));
      },
      py::arg("q"), py::arg("n"), py::arg("mode"));

  m.def("count_lcd_json", [](std::uint64_t q, std::uint64_t n, const std::string& mode) {
    return to_json(count_lcd(q, n, parse_mode(mode))).dump();
  });
  m.def("enumerate_lcd_json", [](std::uint64_t p, unsigned e, std::uint64_t n, const std::string& mode) {
    return to_json(enumerate_lcd(FieldCtx::make(p, e), n, parse_mode(mode))).dump();
  });
  m.def("dual_generator", [](std::uint64_t p, unsigned e, std::uint64_t n, const std::string& gen, const std::string& mode) {
    const Mode md = parse_mode(mode);
    return to_string(dual_generator(code_from(p, e, n, gen, md), md));
  });
  m.def("brute_dual_generator", [](std::uint64_t p, unsigned e, std::uint64_t n, const std::string& gen, const std::string& mode) {
    const Mode md = parse_mode(mode);
    return to_string(brute_dual(code_from(p, e, n, gen, md), md).gen);
  });
  m.def("is_lcd", [](std::uint64_t p, unsigned e, std::uint64_t n, const std::string& gen, const std::string& mode) {
    const Mode md = parse_mode(mode);
    return is_lcd(code_from(p, e, n, gen, md), md);
  });

  m.def(
      "selftest_json",
      [](std::uint64_t q_max, std::uint64_t n_max, std::uint64_t code_n_max) {
        SelftestConfig cfg;
        cfg.q_max = q_max;
        cfg.n_max = n_max;
        cfg.code_n_max = code_n_max;
        SuiteRun run;
        {
          py::gil_scoped_release release;
          run = run_suite(cfg);
        }
        Json rows = Json::array();
        for (const auto& c : run.criteria) {
          rows.push_back(Json{{"id", c.id}, {"name", c.name}, {"checks", c.checks}, {"failures", c.failures},
                              {"passed", c.passed()}, {"first_failure", c.first_failure}});
        }
        return rows.dump();
      },
      py::arg("q_max"), py::arg("n_max"), py::arg("code_n_max"));
}
