#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orbit/cli.hpp"
#include "orbit/combinatorics.hpp"

namespace py = pybind11;

namespace {

orbit::Scalar to_scalar(const std::string& re, const std::string& im) {
  return orbit::Scalar(orbit::parse_rational(re), orbit::parse_rational(im));
}

std::pair<std::string, std::string> from_scalar(const orbit::Scalar& z) {
  const auto& g = z.exact();
  return {orbit::to_string(g.re), orbit::to_string(g.im)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact closed forms and verdicts for iterates of affine maps in Jordan form";

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out;
        std::ostringstream err;
        int code;
        {
          py::gil_scoped_release release;
          code = orbit::cli::run(args, in, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Run one orbit-verdict command line; returns (exit_code, stdout, stderr).");

  m.def(
      "binom", [](long n, long j) { return orbit::binom(n, j).get_str(); }, py::arg("n"),
      py::arg("j"), "C(n, j) as a decimal string.");
  m.def(
      "s_sum",
      [](long j, long k, const std::string& re, const std::string& im) {
        return from_scalar(orbit::s_sum(j, k, to_scalar(re, im)));
      },
      py::arg("j"), py::arg("k"), py::arg("re"), py::arg("im") = "0");
  m.def(
      "t_sum",
      [](long j, long k, const std::string& re, const std::string& im) {
        return from_scalar(orbit::t_sum(j, k, to_scalar(re, im)));
      },
      py::arg("j"), py::arg("k"), py::arg("re"), py::arg("im") = "0");
  m.def(
      "d_factor",
      [](long k, long j, const std::string& re, const std::string& im) {
        return from_scalar(orbit::d_factor(k, j, to_scalar(re, im)));
      },
      py::arg("k"), py::arg("j"), py::arg("re"), py::arg("im") = "0");

  py::register_exception<orbit::IdentityViolation>(m, "IdentityViolation", PyExc_ArithmeticError);
}
