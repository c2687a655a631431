#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gapasym/asymptotics.hpp"
#include "gapasym/cli/cli.hpp"
#include "gapasym/fredholm.hpp"
#include "gapasym/specfun.hpp"
#include "gapasym/structured.hpp"

namespace py = pybind11;
using namespace gapasym;

namespace {

py::dict expansion_dict(const asymptotics::ExpansionValue& e) {
  py::dict terms;
  for (const auto& [label, value] : e.terms) terms[py::str(label)] = value;
  py::dict d;
  d["terms"] = terms;
  d["total"] = e.total;
  return d;
}

py::dict series_dict(const asymptotics::ResidualSeries& r) {
  py::dict d;
  d["parameter"] = r.parameter;
  d["residual"] = r.residual;
  d["extrapolated_limit"] = r.extrapolated_limit;
  d["fitted_order"] = r.fitted_order;
  d["monotone"] = r.magnitudes_strictly_decreasing();
  return d;
}

py::dict scaling_dict(const structured::ScalingSequence& s) {
  py::dict d;
  d["s"] = s.s;
  d["orders"] = s.orders;
  d["alphas"] = s.alphas;
  d["values"] = s.values;
  d["target"] = s.target;
  d["abs_errors"] = s.abs_errors();
  d["monotone"] = s.errors_strictly_decreasing();
  return d;
}

py::dict gap_dict(const fredholm::GapResult& r) {
  py::dict d;
  d["log_det"] = r.log_det;
  d["m"] = r.config.m;
  d["cutoff"] = r.config.airy_cutoff;
  d["error_estimate"] = r.error_estimate;
  return d;
}

py::dict identity_dict(const structured::IdentityCheck& c) {
  py::dict d;
  d["lhs"] = c.lhs;
  d["rhs"] = c.rhs;
  d["discrepancy"] = c.discrepancy;
  return d;
}

asymptotics::RecoveryKind recovery_kind(const std::string& name) {
  if (name == "dyson") return asymptotics::RecoveryKind::dyson;
  if (name == "tw") return asymptotics::RecoveryKind::tracy_widom;
  throw InputError("unknown recovery kind " + name);
}

}  // namespace

PYBIND11_MODULE(_gapasym, m) {
  m.doc() = "Gap probabilities, structured determinants and their large-gap asymptotics";

  py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_RuntimeError);

  m.def("constants", [] {
    const auto& c = specfun::constants();
    py::dict d;
    d["zeta_prime_minus_one"] = c.zeta_prime_minus_one;
    d["c0"] = c.c0;
    d["chi_tw"] = c.chi_tw;
    return d;
  });
  m.def("airy", [](double x) {
    const auto a = specfun::airy(x);
    return std::pair{a.ai, a.ai_prime};
  }, py::arg("x"));

  m.def("sine_det", [](double s, int points) { return gap_dict(fredholm::fredholm_det_sine({s}, {points, 14.0})); },
        py::arg("s"), py::arg("m") = 0);
  m.def("airy_det", [](double s, int points, double cutoff) {
    return gap_dict(fredholm::fredholm_det_airy({s}, {points, cutoff}));
  }, py::arg("s"), py::arg("m") = 0, py::arg("cutoff") = 14.0);

  m.def("toeplitz_logdet", [](int n, double alpha, const std::string& route) {
    if (route == "op") return structured::toeplitz_logdet_arc(n, alpha).log_abs;
    if (route == "moments") return structured::toeplitz_logdet_moments(n, alpha).log_abs;
    if (route == "smallarc") return structured::toeplitz_logdet_smallarc(n, alpha).log_abs;
    throw InputError("unknown route " + route);
  }, py::arg("n"), py::arg("alpha"), py::arg("route") = "op");
  m.def("hankel_logdet", [](int n, double alpha, const std::string& route) {
    if (route == "op") return structured::hankel_logdet_trunc(n, alpha).log_abs;
    if (route == "moments") return structured::hankel_logdet_moments(n, alpha).log_abs;
    throw InputError("unknown route " + route);
  }, py::arg("n"), py::arg("alpha"), py::arg("route") = "op");
  m.def("hankel_full_logdet", [](int n) { return structured::hankel_logdet_laguerre_full(n).log_abs; }, py::arg("n"));
  m.def("selberg_logA", [](int n) { return structured::selberg_logA(n).log_abs; }, py::arg("n"));
  m.def("smallarc_check", &structured::toeplitz_smallarc_check, py::arg("n"), py::arg("alpha"));

  m.def("verify_2det2", [](int n, double alpha, double h) {
    return identity_dict(structured::verify_identity_2det2(n, alpha, h));
  }, py::arg("n"), py::arg("alpha"), py::arg("h") = 0.0);
  m.def("verify_idinterm", [](int n, double alpha, double h) {
    return identity_dict(structured::verify_identity_hankel(n, alpha, h));
  }, py::arg("n"), py::arg("alpha"), py::arg("h") = 0.0);

  m.def("scaling_limit_sine", [](double s, const std::vector<int>& orders) {
    return scaling_dict(structured::scaling_limit_sine(s, orders));
  }, py::arg("s"), py::arg("orders"));
  m.def("scaling_limit_airy", [](double s, const std::vector<int>& orders) {
    return scaling_dict(structured::scaling_limit_airy(s, orders));
  }, py::arg("s"), py::arg("orders"));

  m.def("dyson_expansion", [](double s) { return expansion_dict(asymptotics::dyson_expansion(s)); }, py::arg("s"));
  m.def("tw_expansion", [](double s) { return expansion_dict(asymptotics::tw_expansion(s)); }, py::arg("s"));
  m.def("asf_eval", [](int n, double a) { return expansion_dict(asymptotics::asf_eval(n, a)); }, py::arg("n"),
        py::arg("alpha"));
  m.def("intD2_eval", [](int n, double a) { return expansion_dict(asymptotics::intD2_eval(n, a)); }, py::arg("n"),
        py::arg("alpha"));
  m.def("diff_rhs_eval", &asymptotics::diff_rhs_eval, py::arg("n"), py::arg("alpha"));
  m.def("di2_rhs_eval", &asymptotics::di2_rhs_eval, py::arg("n"), py::arg("alpha"));

  m.def("selberg_delta", [](const std::vector<int>& orders) {
    return series_dict(asymptotics::selberg_delta_n(orders));
  }, py::arg("orders"));
  m.def("hankel_delta", [](const std::vector<int>& orders) {
    return series_dict(asymptotics::hankel_delta_tilde_n(orders));
  }, py::arg("orders"));
  m.def("constant_recovery", [](const std::string& kind, const std::vector<double>& s) {
    return series_dict(asymptotics::constant_recovery(recovery_kind(kind), s));
  }, py::arg("kind"), py::arg("s"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Run one command line; returns (exit_code, stdout, stderr).");
}
