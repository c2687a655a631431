#include "gapasym/cli/cli.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <span>

#include <CLI11.hpp>

#include "gapasym/asymptotics.hpp"
#include "gapasym/calculus.hpp"
#include "gapasym/cli/parallel.hpp"
#include "gapasym/cli/report.hpp"
#include "gapasym/errors.hpp"
#include "gapasym/fredholm.hpp"
#include "gapasym/specfun.hpp"
#include "gapasym/structured.hpp"

namespace gapasym::cli {

int thread_cap() {
  const char* env = std::getenv("GAPASYM_THREADS");
  if (env == nullptr || *env == '\0') {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
  }
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(env, &end, 10);
  if (errno != 0 || *end != '\0' || v < 1 || v > 4096)
    throw InputError("GAPASYM_THREADS must be a positive integer");
  return static_cast<int>(v);
}

namespace {

constexpr double kPi = std::numbers::pi;

struct Options {
  std::string format = "csv";
  std::string output;

  std::vector<double> s, alpha, eps;
  std::vector<int> n, orders;
  int m = 0;
  double cutoff = 14.0;
  double h = 0.0;
  std::string route = "op";
  std::string identity;
  std::string target;
  std::string kind;
};

using Row = std::vector<Cell>;

long long as_int(int v) { return v; }

template <class T>
nlohmann::ordered_json list_json(const std::vector<T>& v) {
  return nlohmann::ordered_json(v);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

// Grid rows in n-major order.
template <class F>
std::vector<Row> grid(const std::vector<int>& ns, const std::vector<double>& alphas, int threads, F&& f) {
  return parallel_map(ns.size() * alphas.size(), threads,
                      [&](std::size_t i) { return f(ns[i / alphas.size()], alphas[i % alphas.size()]); });
}

Report cmd_constants() {
  const auto& c = specfun::constants();
  Report r;
  r.command = "constants";
  r.columns = {"name", "value"};
  r.rows = {{std::string("zeta_prime_minus_one"), c.zeta_prime_minus_one},
            {std::string("c0"), c.c0},
            {std::string("chi_tw"), c.chi_tw}};
  return r;
}

Report cmd_sine_det(const Options& o, int threads) {
  Report r;
  r.command = "sine-det";
  r.parameters = {{"s", list_json(o.s)}, {"m", o.m}};
  r.columns = {"s", "m", "log_det", "error_estimate"};
  r.rows = parallel_map(o.s.size(), threads, [&](std::size_t i) {
    const auto g = fredholm::fredholm_det_sine({o.s[i]}, {o.m, o.cutoff});
    return Row{o.s[i], as_int(g.config.m), g.log_det, g.error_estimate};
  });
  return r;
}

Report cmd_airy_det(const Options& o, int threads) {
  Report r;
  r.command = "airy-det";
  r.parameters = {{"s", list_json(o.s)}, {"m", o.m}, {"cutoff", o.cutoff}};
  r.columns = {"s", "m", "cutoff", "log_det", "error_estimate"};
  r.rows = parallel_map(o.s.size(), threads, [&](std::size_t i) {
    const auto g = fredholm::fredholm_det_airy({o.s[i]}, {o.m, o.cutoff});
    return Row{o.s[i], as_int(g.config.m), g.config.airy_cutoff, g.log_det, g.error_estimate};
  });
  return r;
}

Report cmd_toeplitz(const Options& o, int threads) {
  require(o.route == "op" || o.route == "moments" || o.route == "smallarc", "toeplitz: unknown route " + o.route);
  Report r;
  r.command = "toeplitz";
  r.parameters = {{"n", list_json(o.n)}, {"alpha", list_json(o.alpha)}, {"route", o.route}};
  r.columns = {"n", "alpha", "route", "log_det"};
  r.rows = grid(o.n, o.alpha, threads, [&](int n, double a) {
    LogValue v;
    if (o.route == "op") v = structured::toeplitz_logdet_arc(n, a);
    else if (o.route == "moments") v = structured::toeplitz_logdet_moments(n, a);
    else v = structured::toeplitz_logdet_smallarc(n, a);
    return Row{as_int(n), a, o.route, v.log_abs};
  });
  return r;
}

Report cmd_hankel(const Options& o, int threads) {
  require(o.route == "op" || o.route == "moments", "hankel: unknown route " + o.route);
  Report r;
  r.command = "hankel";
  r.parameters = {{"n", list_json(o.n)}, {"alpha", list_json(o.alpha)}, {"route", o.route}};
  r.columns = {"n", "alpha", "route", "log_det"};
  r.rows = grid(o.n, o.alpha, threads, [&](int n, double a) {
    const LogValue v = o.route == "op" ? structured::hankel_logdet_trunc(n, a) : structured::hankel_logdet_moments(n, a);
    return Row{as_int(n), a, o.route, v.log_abs};
  });
  return r;
}

Report cmd_hankel_full(const Options& o) {
  Report r;
  r.command = "hankel-full";
  r.parameters = {{"n", list_json(o.n)}};
  r.columns = {"n", "log_det"};
  for (int n : o.n) r.rows.push_back({as_int(n), structured::hankel_logdet_laguerre_full(n).log_abs});
  return r;
}

Report cmd_selberg(const Options& o) {
  Report r;
  r.command = "selberg";
  r.parameters = {{"n", list_json(o.n)}};
  r.columns = {"n", "log_A"};
  for (int n : o.n) r.rows.push_back({as_int(n), structured::selberg_logA(n).log_abs});
  return r;
}

Report cmd_verify(const Options& o, int threads) {
  Report r;
  r.command = "verify";
  const std::string& id = o.identity;
  std::vector<double> alphas = o.alpha;
  if (id == "smallarc") {
    require(o.alpha.empty() != o.eps.empty(), "verify smallarc: give exactly one of --alpha and --eps");
    if (!o.eps.empty())
      for (double e : o.eps) alphas.push_back(kPi - e);
  } else {
    require(!o.alpha.empty(), "verify " + id + ": --alpha is required");
    require(o.eps.empty(), "verify " + id + ": --eps applies to smallarc only");
  }
  r.parameters = {{"identity", id}, {"n", list_json(o.n)}, {"alpha", list_json(alphas)}, {"h", o.h}};

  if (id == "2det2" || id == "idinterm") {
    r.columns = {"n", "alpha", "h", "lhs", "rhs", "discrepancy"};
    r.rows = grid(o.n, alphas, threads, [&](int n, double a) {
      const double h = o.h == 0.0 ? structured::default_fd_step(a) : o.h;
      const auto c = id == "2det2" ? structured::verify_identity_2det2(n, a, h) : structured::verify_identity_hankel(n, a, h);
      return Row{as_int(n), a, h, c.lhs, c.rhs, c.discrepancy};
    });
  } else if (id == "diff" || id == "di2") {
    r.columns = {"n", "alpha", "h", "fd_derivative", "rhs", "gap"};
    r.rows = grid(o.n, alphas, threads, [&](int n, double a) {
      const double h = o.h == 0.0 ? structured::default_fd_step(a) : o.h;
      double rhs, fd;
      if (id == "diff") {
        rhs = asymptotics::diff_rhs_eval(n, a);
        require(a > h && a < kPi - h, "verify diff: need h < alpha < pi - h");
        fd = numerics::central_difference([n](double x) { return structured::toeplitz_logdet_arc(n, x).log_abs; }, a, h);
      } else {
        rhs = asymptotics::di2_rhs_eval(n, a);
        require(a > h, "verify di2: need alpha > h");
        fd = numerics::central_difference([n](double x) { return structured::hankel_logdet_trunc(n, x).log_abs; }, a, h);
      }
      return Row{as_int(n), a, h, fd, rhs, std::fabs(fd - rhs)};
    });
  } else if (id == "smallarc") {
    r.columns = {"n", "alpha", "eps", "deviation"};
    r.rows = grid(o.n, alphas, threads, [&](int n, double a) {
      return Row{as_int(n), a, kPi - a, structured::toeplitz_smallarc_check(n, a)};
    });
  } else {
    throw InputError("verify: unknown identity " + id);
  }
  return r;
}

void mark_monotone(std::vector<Row>& rows, std::size_t error_column) {
  double prev = INFINITY;
  for (auto& row : rows) {
    const double e = std::get<double>(row[error_column]);
    row.push_back(e < prev);
    prev = e;
  }
}

Report cmd_sweep(const Options& o, int threads) {
  const std::string& t = o.target;
  Report r;
  r.command = "sweep";
  require(!o.orders.empty(), "sweep: --orders is required");
  for (std::size_t i = 1; i < o.orders.size(); ++i)
    require(o.orders[i] > o.orders[i - 1], "sweep: orders must be strictly increasing");
  const std::size_t k = o.orders.size();

  if (t == "limT" || t == "limH") {
    require(o.s.size() == 1, "sweep " + t + ": exactly one --s value is required");
    require(o.alpha.empty(), "sweep " + t + ": --alpha does not apply");
    const double s = o.s.front();
    const bool sine = t == "limT";
    std::vector<double> alphas;
    for (int n : o.orders) alphas.push_back(sine ? structured::scaling_alpha_sine(s, n) : structured::scaling_alpha_airy(s, n));
    r.parameters = {{"target", t}, {"s", s}, {"orders", list_json(o.orders)}};
    r.columns = {"n", "alpha", "value", "target", "abs_error", "monotone"};
    // The last task is the Fredholm target.
    const auto v = parallel_map(k + 1, threads, [&](std::size_t i) {
      if (i == k) return sine ? structured::scaling_target_sine(s) : structured::scaling_target_airy(s);
      return sine ? structured::scaling_term_sine(s, o.orders[i]) : structured::scaling_term_airy(s, o.orders[i]);
    });
    for (std::size_t i = 0; i < k; ++i)
      r.rows.push_back({as_int(o.orders[i]), alphas[i], v[i], v[k], std::fabs(v[i] - v[k])});
  } else if (t == "asf" || t == "intD2") {
    require(o.s.size() + o.alpha.size() == 1, "sweep " + t + ": give exactly one --s or one --alpha");
    const bool asf = t == "asf";
    std::vector<double> alphas;
    for (int n : o.orders) {
      if (!o.alpha.empty()) alphas.push_back(o.alpha.front());
      else alphas.push_back(asf ? structured::scaling_alpha_sine(o.s.front(), n) : structured::scaling_alpha_airy(o.s.front(), n));
    }
    for (std::size_t i = 0; i < k; ++i) {
      // Fail on preconditions before any determinant is computed.
      if (asf) asymptotics::asf_eval(o.orders[i], alphas[i]);
      else asymptotics::intD2_eval(o.orders[i], alphas[i]);
    }
    r.parameters = {{"target", t}};
    if (o.alpha.empty()) r.parameters["s"] = o.s.front();
    else r.parameters["alpha"] = o.alpha.front();
    r.parameters["orders"] = list_json(o.orders);
    r.columns = {"n", "alpha", "value", "expansion", "abs_error", "monotone"};
    r.rows = parallel_map(k, threads, [&](std::size_t i) {
      const int n = o.orders[i];
      const double a = alphas[i];
      double value, expansion;
      if (asf) {
        value = structured::toeplitz_logdet_arc(n, a).log_abs;
        expansion = asymptotics::asf_eval(n, a).total;
      } else {
        value = structured::hankel_logdet_trunc(n, a).log_abs - structured::hankel_logdet_laguerre_full(n).log_abs;
        expansion = asymptotics::intD2_eval(n, a).total;
      }
      return Row{as_int(n), a, value, expansion, std::fabs(value - expansion)};
    });
  } else {
    throw InputError("sweep: unknown target " + t);
  }
  mark_monotone(r.rows, 4);
  return r;
}

Report cmd_residual(const Options& o, int threads) {
  const std::string& kind = o.kind;
  Report r;
  r.command = "residual";
  asymptotics::ResidualSeries series;
  if (kind == "dyson" || kind == "tw") {
    require(!o.s.empty(), "residual " + kind + ": --s is required");
    require(o.orders.empty(), "residual " + kind + ": --orders does not apply");
    for (std::size_t i = 0; i < o.s.size(); ++i) {
      require(o.s[i] >= 2.0 && std::isfinite(o.s[i]), "residual: s values must be at least 2");
      require(i == 0 || o.s[i] > o.s[i - 1], "residual: s values must be strictly increasing");
    }
    const auto k = kind == "dyson" ? asymptotics::RecoveryKind::dyson : asymptotics::RecoveryKind::tracy_widom;
    auto res = parallel_map(o.s.size(), threads, [&](std::size_t i) { return asymptotics::recovery_residual(k, o.s[i]); });
    series = asymptotics::make_residual_series(o.s, std::move(res));
    r.parameters = {{"kind", kind}, {"s", list_json(o.s)}};
  } else if (kind == "selberg-delta" || kind == "hankel-delta") {
    require(!o.orders.empty(), "residual " + kind + ": --orders is required");
    require(o.s.empty(), "residual " + kind + ": --s does not apply");
    series = kind == "selberg-delta" ? asymptotics::selberg_delta_n(o.orders) : asymptotics::hankel_delta_tilde_n(o.orders);
    r.parameters = {{"kind", kind}, {"orders", list_json(o.orders)}};
  } else {
    throw InputError("residual: unknown kind " + kind);
  }
  r.columns = {"parameter", "residual", "abs_residual", "monotone", "extrapolated_limit", "fitted_order"};
  double prev = INFINITY;
  for (std::size_t i = 0; i < series.residual.size(); ++i) {
    const double a = std::fabs(series.residual[i]);
    r.rows.push_back({series.parameter[i], series.residual[i], a, a < prev, series.extrapolated_limit, series.fitted_order});
    prev = a;
  }
  return r;
}

CLI::Option* add_list(CLI::App* app, const std::string& name, auto& target, const std::string& desc) {
  return app->add_option(name, target, desc)->delimiter(',');
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gap probabilities, structured determinants and their asymptotics", "gapasym"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output,-o", o.output, "write the report to this file");

  auto* constants = app.add_subcommand("constants", "zeta'(-1), c0 and chi");

  auto* sine = app.add_subcommand("sine-det", "ln det(I - K_sine) on (0, 2s)");
  add_list(sine, "--s", o.s, "gap half-lengths")->required();
  sine->add_option("--m", o.m, "quadrature points (0 = default rule)");

  auto* airy = app.add_subcommand("airy-det", "ln det(I - K_Airy) on (-s, inf)");
  add_list(airy, "--s", o.s, "gap parameters")->required();
  airy->add_option("--m", o.m, "quadrature points (0 = default rule)");
  airy->add_option("--cutoff", o.cutoff, "upper truncation point");

  auto* toeplitz = app.add_subcommand("toeplitz", "ln D_n(f_alpha) for the arc symbol");
  add_list(toeplitz, "--n", o.n, "orders")->required();
  add_list(toeplitz, "--alpha", o.alpha, "arc parameters")->required();
  toeplitz->add_option("--route", o.route, "op, moments or smallarc");

  auto* hankel = app.add_subcommand("hankel", "ln D^H_n(w_alpha) for the truncated weight");
  add_list(hankel, "--n", o.n, "orders")->required();
  add_list(hankel, "--alpha", o.alpha, "truncation points")->required();
  hankel->add_option("--route", o.route, "op or moments");

  auto* hankel_full = app.add_subcommand("hankel-full", "ln D^H_n(w_inf)");
  add_list(hankel_full, "--n", o.n, "orders")->required();

  auto* selberg = app.add_subcommand("selberg", "ln A_n");
  add_list(selberg, "--n", o.n, "orders")->required();

  auto* verify = app.add_subcommand("verify", "differential identities and derivative asymptotics");
  verify->set_help_flag("--help", "Print this help message and exit");
  verify->add_option("--identity", o.identity, "2det2, idinterm, diff, di2 or smallarc")->required();
  add_list(verify, "--n", o.n, "orders")->required();
  add_list(verify, "--alpha", o.alpha, "alpha values");
  add_list(verify, "--eps", o.eps, "pi - alpha values (smallarc)");
  verify->add_option("--h", o.h, "finite-difference step (0 = default rule)");

  auto* sweep = app.add_subcommand("sweep", "convergence sweeps over n");
  sweep->add_option("--target", o.target, "limT, limH, asf or intD2")->required();
  add_list(sweep, "--orders", o.orders, "orders n")->required();
  add_list(sweep, "--s", o.s, "double-scaling parameter");
  add_list(sweep, "--alpha", o.alpha, "fixed alpha (asf, intD2)");

  auto* residual = app.add_subcommand("residual", "residuals against the asymptotic formulas");
  residual->add_option("kind,--kind", o.kind, "dyson, tw, selberg-delta or hankel-delta")->required();
  add_list(residual, "--s", o.s, "s values (dyson, tw)");
  add_list(residual, "--orders", o.orders, "orders (selberg-delta, hankel-delta)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gapasym: " << e.what() << "\n";
    return kExitUsage;
  }

  Report report;
  try {
    const int threads = thread_cap();
    if (constants->parsed()) report = cmd_constants();
    else if (sine->parsed()) report = cmd_sine_det(o, threads);
    else if (airy->parsed()) report = cmd_airy_det(o, threads);
    else if (toeplitz->parsed()) report = cmd_toeplitz(o, threads);
    else if (hankel->parsed()) report = cmd_hankel(o, threads);
    else if (hankel_full->parsed()) report = cmd_hankel_full(o);
    else if (selberg->parsed()) report = cmd_selberg(o);
    else if (verify->parsed()) report = cmd_verify(o, threads);
    else if (sweep->parsed()) report = cmd_sweep(o, threads);
    else report = cmd_residual(o, threads);
    validate(report);
  } catch (const InputError& e) {
    err << "gapasym: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "gapasym: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gapasym: " << e.what() << "\n";
    return kExitNumerical;
  }

  const std::string text = render(report, o.format == "json" ? Format::json : Format::csv);
  if (o.output.empty()) {
    out << text;
    out.flush();
    if (!out) {
      err << "gapasym: failed to write the report\n";
      return kExitNumerical;
    }
    return kExitOk;
  }
  std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
  if (f) f << text;
  f.close();
  if (!f) {
    err << "gapasym: cannot write " << o.output << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

}  // namespace gapasym::cli
