// Command-line front end: kernel evaluation, verification suites, degeneration ladders, averaging tables.
#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ellr/averaging.hpp"
#include "ellr/complex_io.hpp"
#include "ellr/degenerations.hpp"
#include "ellr/errors.hpp"
#include "ellr/kernels.hpp"
#include "ellr/parallel.hpp"
#include "ellr/rmatrix.hpp"
#include "ellr/verify.hpp"

using namespace ellr;
using json = nlohmann::ordered_json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Args {
  std::string tau, lambda, mu, eta, u, v, w;
  std::optional<double> tol;
  int samples = 20;
  std::uint64_t seed = 1;
  int nodes = 128;
  int truncation = 12;
  std::string output = "json";

  std::string kernel, sign = "plus", family = "cyl";
  std::string suite;
  std::string case_id, target = "both";
  std::vector<double> scales;
  std::string identity, tail = "paired";
  std::vector<int> n_list;
};

std::optional<cplx> opt_complex(const std::string& s, const char* name) {
  if (s.empty()) return std::nullopt;
  try {
    return parse_complex(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(std::string("--") + name + ": cannot parse '" + s + "' as a complex number a+bi");
  }
}

cplx need_complex(const std::string& s, const char* name) {
  auto z = opt_complex(s, name);
  if (!z) throw std::invalid_argument(std::string("--") + name + " is required here");
  return *z;
}

RunConfig run_config(const Args& a) {
  RunConfig c;
  c.tau = opt_complex(a.tau, "tau");
  c.lambda = opt_complex(a.lambda, "lambda");
  c.mu = opt_complex(a.mu, "mu");
  c.eta = opt_complex(a.eta, "eta");
  c.tol = a.tol;
  c.samples = a.samples;
  c.seed = a.seed;
  c.quadrature_nodes = a.nodes;
  c.truncation = a.truncation;
  c.output = a.output == "csv" ? OutputFormat::csv : OutputFormat::json;
  validate_config(c);
  return c;
}

void add_common(CLI::App* s, Args& a) {
  s->add_option("--tau", a.tau, "modulus, Im tau > 0");
  s->add_option("--lambda", a.lambda, "dynamical parameter");
  s->add_option("--mu", a.mu, "trigonometric twist mu");
  s->add_option("--eta", a.eta, "trigonometric scale eta, Re eta > 0");
  s->add_option("--tol", a.tol, "tolerance");
  s->add_option("--samples", a.samples, "random samples per suite");
  s->add_option("--seed", a.seed, "random seed");
  s->add_option("--quadrature-nodes", a.nodes, "contour quadrature nodes");
  s->add_option("--truncation", a.truncation, "dual basis order");
  s->add_option("--output", a.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

json cjson(cplx z) { return format_complex(z); }

std::string csv_pair(cplx z) { return format_double(z.real()) + "," + format_double(z.imag()); }

json matrix_json(const Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(cjson(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

// --- eval -----------------------------------------------------------------

int cmd_eval(const Args& a) {
  const RunConfig cfg = run_config(a);
  const cplx tau = cfg.tau.value_or(cplx{0.0, 1.0});
  const EllipticParams p(tau);
  TrigParams tp;
  if (cfg.mu) tp.mu = *cfg.mu;
  if (cfg.eta) tp.eta = *cfg.eta;
  const bool plus = a.sign == "plus";

  json in;
  auto argument = [&]() {
    if (!a.w.empty()) {
      const cplx w = need_complex(a.w, "w");
      in["w"] = cjson(w);
      return w;
    }
    const cplx u = need_complex(a.u, "u");
    const cplx v = opt_complex(a.v, "v").value_or(cplx{0.0});
    in["u"] = cjson(u);
    if (!a.v.empty()) in["v"] = cjson(v);
    return u - v;
  };
  auto lambda = [&]() {
    const cplx l = need_complex(a.lambda, "lambda");
    in["lambda"] = cjson(l);
    return l;
  };

  std::optional<cplx> value;
  std::optional<Mat4> matrix;
  const std::string& k = a.kernel;
  const bool elliptic = k == "theta" || k == "g0" || k == "g_lambda" || k == "gamma" || k == "r_elliptic";
  if (elliptic) in["tau"] = cjson(tau);
  if (k == "psi_cth" || k == "psi_mu" || k == "r_c") {
    in["eta"] = cjson(tp.eta);
    if (k != "psi_cth") {
      in["mu"] = cjson(tp.mu);
      require_zone(tp.mu, tp.eta);
    }
  }
  if (k == "theta") {
    const cplx u = a.u.empty() ? need_complex(a.w, "u") : need_complex(a.u, "u");
    in["u"] = cjson(u);
    value = theta_derivs_auto(u, p).d0;
  } else if (k == "g0") {
    value = g0(argument(), p);
  } else if (k == "g_lambda") {
    const cplx w = argument();
    value = g_lambda(w, lambda(), p);
  } else if (k == "gamma") {
    const cplx w = argument();
    if (!(std::abs(w.imag()) < tau.imag())) throw DomainError("gamma needs |Im w| < Im tau");
    value = gamma_closed(w, p);
  } else if (k == "phi" || k == "psi_tilde" || k == "psi_mu") {
    in["sign"] = a.sign;
    const cplx w = argument();
    DegenerateKernel dk;
    if (k == "phi") dk = plus ? DegenerateKernel::phi_plus : DegenerateKernel::phi_minus;
    else if (k == "psi_tilde") dk = plus ? DegenerateKernel::psi_tilde_plus : DegenerateKernel::psi_tilde_minus;
    else dk = plus ? DegenerateKernel::psi_mu_plus : DegenerateKernel::psi_mu_minus;
    value = degenerate_kernel(dk, w, tp);
  } else if (k == "psi_cth") {
    value = degenerate_kernel(DegenerateKernel::psi_cth, argument(), tp);
  } else if (k == "r_elliptic") {
    const cplx u = need_complex(a.u, "u"), v = opt_complex(a.v, "v").value_or(cplx{0.0});
    in["u"] = cjson(u);
    in["v"] = cjson(v);
    matrix = build_r(u, v, lambda(), p).matrix();
  } else if (k == "r_a" || k == "r_b" || k == "r_c") {
    const cplx u = need_complex(a.u, "u"), v = opt_complex(a.v, "v").value_or(cplx{0.0});
    in["u"] = cjson(u);
    in["v"] = cjson(v);
    DegenerateKind kind = DegenerateKind::r_c_cyl;
    if (k != "r_c") {
      in["family"] = a.family;
      const bool k0 = a.family == "k0";
      kind = k == "r_a" ? (k0 ? DegenerateKind::r_a_k0 : DegenerateKind::r_a_cyl)
                        : (k0 ? DegenerateKind::r_b_k0 : DegenerateKind::r_b_cyl);
    }
    matrix = build_degenerate_r(kind, u, v, tp).matrix();
  }

  if (a.output == "csv") {
    if (value) {
      std::cout << "kernel,re,im\n" << k << "," << csv_pair(*value) << "\n";
    } else {
      std::cout << "kernel,row,col,re,im\n";
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) std::cout << k << "," << i << "," << j << "," << csv_pair((*matrix)(i, j)) << "\n";
    }
    return exit_pass;
  }
  json out;
  out["command"] = "eval";
  out["kernel"] = k;
  out["inputs"] = in;
  if (value) out["value"] = cjson(*value);
  else out["value"] = matrix_json(*matrix);
  std::cout << out.dump(2) << "\n";
  return exit_pass;
}

// --- verify ---------------------------------------------------------------

int cmd_verify(const Args& a) {
  find_suite(a.suite);
  const RunConfig cfg = run_config(a);
  const VerificationReport r = run_suite(a.suite, cfg);
  if (cfg.output == OutputFormat::csv) std::cout << r.to_csv();
  else std::cout << r.to_json().dump(2) << "\n";
  return r.passed ? exit_pass : exit_fail;
}

// --- degenerate -----------------------------------------------------------

int cmd_degenerate(const Args& a) {
  const RunConfig cfg = run_config(a);
  DegenerationCase c;
  if (a.case_id == "a") c.id = DegenerationCaseId::a_rational;
  else if (a.case_id == "b") c.id = DegenerationCaseId::b_trig;
  else c.id = DegenerationCaseId::c_trig_cyl;
  if (cfg.tau) c.tau = *cfg.tau;
  if (cfg.lambda) c.lambda = *cfg.lambda;
  if (cfg.mu) c.trig.mu = *cfg.mu;
  if (cfg.eta) c.trig.eta = *cfg.eta;
  if (c.id == DegenerationCaseId::c_trig_cyl) require_zone(c.trig.mu, c.trig.eta);

  std::vector<double> scales = a.scales;
  if (scales.empty()) {
    switch (c.id) {
      case DegenerationCaseId::a_rational: scales = {10, 20, 40, 80}; break;
      case DegenerationCaseId::b_trig: scales = {1.5, 2, 2.5, 3}; break;
      case DegenerationCaseId::c_trig_cyl: scales = {30, 60, 120}; break;
    }
  }
  if (scales.size() < 2) throw DomainError("a ladder needs at least two scales");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) throw DomainError("ladder scales must be positive");
    if (i > 0 && !(scales[i] > scales[i - 1])) throw DomainError("ladder scales must be strictly increasing");
  }

  std::vector<LimitTarget> targets;
  if (a.target != "glambda") targets.push_back(LimitTarget::g0);
  if (a.target != "g0") targets.push_back(LimitTarget::glambda);

  struct Fit {
    std::string id;
    LadderResult r;
  };
  std::vector<Fit> fits;
  for (LimitTarget t : targets)
    fits.push_back({t == LimitTarget::g0 ? "g0" : "g_lambda", ladder(c, t, scales, default_limit_samples(c.id, t, c.trig))});

  if (a.output == "csv") {
    std::cout << "scale,kernel_id,max_error,fitted_rate\n";
    for (const auto& f : fits)
      for (const auto& row : f.r.rows)
        std::cout << format_double(row.scale) << "," << f.id << "," << format_double(row.max_error) << ","
                  << format_double(f.r.fitted_rate) << "\n";
    return exit_pass;
  }
  json out;
  out["command"] = "degenerate";
  out["case"] = a.case_id;
  json in;
  if (c.id == DegenerationCaseId::a_rational) in["tau"] = cjson(c.tau);
  if (c.id != DegenerationCaseId::c_trig_cyl) in["lambda"] = cjson(c.lambda);
  else {
    in["mu"] = cjson(c.trig.mu);
    in["eta"] = cjson(c.trig.eta);
  }
  out["inputs"] = in;
  out["rate_model"] = c.id == DegenerationCaseId::b_trig ? "log-linear" : "log-log";
  json rows = json::array();
  for (const auto& f : fits)
    for (const auto& row : f.r.rows)
      rows.push_back({{"scale", row.scale}, {"kernel_id", f.id}, {"max_error", row.max_error},
                      {"fitted_rate", f.r.fitted_rate}});
  out["rows"] = rows;
  json summary = json::array();
  for (const auto& f : fits)
    summary.push_back({{"kernel_id", f.id}, {"fitted_rate", f.r.fitted_rate}, {"monotone", f.r.monotone}});
  out["fits"] = summary;
  std::cout << out.dump(2) << "\n";
  return exit_pass;
}

// --- average --------------------------------------------------------------

int cmd_average(const Args& a) {
  const RunConfig cfg = run_config(a);
  const cplx tau = cfg.tau.value_or(cplx{0.0, 1.0});
  const EllipticParams p(tau);
  const cplx u = opt_complex(a.u, "u").value_or(cplx{0.2, -0.3});
  const cplx lambda = cfg.lambda.value_or(cplx{0.3, -0.2});
  const cplx mu = cfg.mu.value_or(cplx{0.5});
  const cplx eta = cfg.eta.value_or(cplx{1.0});
  const std::string& id = a.identity;
  const bool rational = id == "rational-to-trig" || id == "rmatrix-c";

  AveragingConfig ac;
  ac.tail = a.tail == "plain" ? TailMode::plain : a.tail == "one_sided" ? TailMode::one_sided : TailMode::paired;

  std::vector<int> ns = a.n_list;
  if (ns.empty()) {
    const double tol = cfg.tol.value_or(rational ? 1e-6 : 1e-12);
    ns = {rational ? default_rational_N(tol)
                   : default_elliptic_N(u, id == "avctg" ? std::nullopt : std::optional<cplx>(lambda), p, tol)};
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 0) throw DomainError("N must be >= 0");
    if (i > 0 && !(ns[i] > ns[i - 1])) throw DomainError("--n-list must be strictly increasing");
  }

  std::optional<cplx> scalar_target;
  std::optional<RMatrix4> matrix_target;
  if (id == "avctg") scalar_target = g0(u, p);
  else if (id == "avctg-p") scalar_target = g_lambda(u, lambda, p);
  else if (id == "avctg-m") scalar_target = g_lambda(u, -lambda, p);
  else if (id == "rmatrix-elliptic") matrix_target = build_r(u, 0.0, lambda, p);
  else if (id == "rational-to-trig") scalar_target = rational_to_trig_target(u, mu, eta);
  else matrix_target = build_degenerate_r(DegenerateKind::r_c_cyl, u, 0.0, TrigParams{mu, eta});

  std::vector<double> residuals;
  for (int n : ns) {
    ac.N = n;
    double r = 0.0;
    if (id == "avctg") r = std::abs(vp_ctg_sum(u, p, ac) - *scalar_target);
    else if (id == "avctg-p") r = std::abs(vp_glambda_sum(u, lambda, Sign::plus, p, ac) - *scalar_target);
    else if (id == "avctg-m") r = std::abs(vp_glambda_sum(u, lambda, Sign::minus, p, ac) - *scalar_target);
    else if (id == "rmatrix-elliptic") r = average_rmatrix_elliptic(u, lambda, p, ac).max_diff(*matrix_target);
    else if (id == "rational-to-trig") r = std::abs(vp_rational_to_trig(u, mu, eta, ac) - *scalar_target);
    else r = average_rmatrix_c(u, mu, eta, ac).max_diff(*matrix_target);
    residuals.push_back(r);
  }
  const bool paired = ac.tail == TailMode::paired;

  if (a.output == "csv") {
    std::cout << "N,residual,paired\n";
    for (std::size_t i = 0; i < ns.size(); ++i)
      std::cout << ns[i] << "," << format_double(residuals[i]) << "," << (paired ? "true" : "false") << "\n";
    return exit_pass;
  }
  json out;
  out["command"] = "average";
  out["identity"] = id;
  json in;
  in["u"] = cjson(u);
  if (rational) {
    in["mu"] = cjson(mu);
    in["eta"] = cjson(eta);
  } else {
    in["tau"] = cjson(tau);
    if (id != "avctg") in["lambda"] = cjson(lambda);
  }
  in["tail"] = a.tail;
  out["inputs"] = in;
  json rows = json::array();
  for (std::size_t i = 0; i < ns.size(); ++i)
    rows.push_back({{"N", ns[i]}, {"residual", residuals[i]}, {"paired", paired}});
  out["rows"] = rows;
  std::cout << out.dump(2) << "\n";
  return exit_pass;
}

void list_suites() {
  for (const auto& s : suites())
    std::cout << s.name << "  [tol " << format_double(s.default_tol) << "]  " << s.identity << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  CLI::App app{"Elliptic dynamical r-matrices: kernels, identity checks, degenerations and averaging"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list-suites", list, "print the verification suites and the identity each one checks");
  Args a;

  auto* eval = app.add_subcommand("eval", "evaluate a kernel or r-matrix");
  add_common(eval, a);
  eval->add_option("--kernel", a.kernel)
      ->required()
      ->check(CLI::IsMember({"theta", "g0", "g_lambda", "gamma", "phi", "psi_tilde", "psi_cth", "psi_mu",
                             "r_elliptic", "r_a", "r_b", "r_c"}));
  eval->add_option("--u", a.u, "first point");
  eval->add_option("--v", a.v, "second point (default 0)");
  eval->add_option("--w", a.w, "difference argument");
  eval->add_option("--sign", a.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));
  eval->add_option("--family", a.family, "k0 or cyl for r_a, r_b")->check(CLI::IsMember({"k0", "cyl"}));

  auto* verify = app.add_subcommand("verify", "run an identity-verification suite");
  add_common(verify, a);
  verify->add_option("--suite", a.suite)->required();

  auto* degen = app.add_subcommand("degenerate", "degeneration ladder");
  add_common(degen, a);
  degen->add_option("--case", a.case_id)->required()->check(CLI::IsMember({"a", "b", "c"}));
  degen->add_option("--scales", a.scales, "comma-separated increasing ladder")->delimiter(',');
  degen->add_option("--target", a.target, "g0, glambda or both")->check(CLI::IsMember({"g0", "glambda", "both"}));

  auto* avg = app.add_subcommand("average", "averaging convergence table");
  add_common(avg, a);
  avg->add_option("--identity", a.identity)
      ->required()
      ->check(CLI::IsMember({"avctg", "avctg-p", "avctg-m", "rmatrix-elliptic", "rational-to-trig", "rmatrix-c"}));
  avg->add_option("--n-list", a.n_list, "comma-separated increasing truncations")->delimiter(',');
  avg->add_option("--u", a.u, "evaluation point");
  avg->add_option("--tail", a.tail, "paired, plain or one_sided")
      ->check(CLI::IsMember({"paired", "plain", "one_sided"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    if (list) {
      list_suites();
      return exit_pass;
    }
    if (eval->parsed()) return cmd_eval(a);
    if (verify->parsed()) return cmd_verify(a);
    if (degen->parsed()) return cmd_degenerate(a);
    if (avg->parsed()) return cmd_average(a);
    std::cerr << app.help();
    return exit_usage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return exit_usage;
}
