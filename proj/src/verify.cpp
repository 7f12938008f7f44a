#include "ellr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ellr/complex_io.hpp"
#include "ellr/convolution.hpp"
#include "ellr/degenerations.hpp"
#include "ellr/dual_basis.hpp"
#include "ellr/errors.hpp"
#include "ellr/kernels.hpp"
#include "ellr/parallel.hpp"
#include "ellr/rmatrix.hpp"

namespace ellr {

namespace {

using Rng = std::mt19937_64;

struct Sample {
  int variant = 0;
  cplx tau{0.0, 1.0};
  std::vector<cplx> z;
  std::string label;
};

struct Suite {
  SuiteInfo info;
  std::function<Sample(Rng&, int, const RunConfig&)> draw;
  std::function<double(const Sample&, const RunConfig&)> eval;
};

double uni(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }

cplx draw_tau(Rng& g, const RunConfig& cfg, double lo = 0.3, double hi = 2.0) {
  if (cfg.tau) return *cfg.tau;
  return {uni(g, -0.5, 0.5), uni(g, lo, hi)};
}

cplx draw_box(Rng& g, double half_re, double lo_im, double hi_im) { return {uni(g, -half_re, half_re), uni(g, lo_im, hi_im)}; }

// Point in [-0.5, 0.5] + [-b, b] i at distance >= d from the lattice.
cplx draw_off_lattice(Rng& g, cplx tau, double b, double d) {
  for (;;) {
    const cplx z = draw_box(g, 0.5, -b, b);
    if (lattice_distance(z, tau) >= d) return z;
  }
}

cplx draw_lambda(Rng& g, const RunConfig& cfg, cplx tau, double band_fraction) {
  if (cfg.lambda) return *cfg.lambda;
  const double T = tau.imag();
  for (;;) {
    const cplx l = draw_box(g, 0.5, -band_fraction * T, band_fraction * T);
    if (lattice_distance(l, tau) >= 0.1) return l;
  }
}

std::string describe(const Sample& s, std::initializer_list<const char*> names) {
  std::ostringstream os;
  if (!s.label.empty()) os << s.label << " ";
  os << "tau=" << format_complex(s.tau);
  std::size_t k = 0;
  for (const char* n : names) {
    if (k >= s.z.size()) break;
    os << " " << n << "=" << format_complex(s.z[k++]);
  }
  return os.str();
}


// --- suites ---------------------------------------------------------------

Sample draw_quasi(Rng& g, int, const RunConfig& cfg) {
  Sample s;
  s.tau = draw_tau(g, cfg);
  s.z = {uni(g, 0.0, 1.0) + uni(g, 0.0, 1.0) * s.tau};
  return s;
}

double eval_quasi(const Sample& s, const RunConfig&) {
  const EllipticParams p(s.tau);
  const cplx u = s.z[0];
  const cplx t = theta(u, p);
  // relative to the larger side
  auto gap = [](cplx a, cplx b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); };
  double r = gap(theta(u + 1.0, p), -t);
  r = std::max(r, gap(theta(u + s.tau, p), -std::exp(-2.0 * pi * I * u - pi * I * s.tau) * t));
  r = std::max(r, gap(theta(-u, p), -t));
  const ThetaDerivs d = theta_derivs(0.0, p);
  r = std::max({r, std::abs(d.d0), std::abs(d.d1 - 1.0), std::abs(d.d2)});
  return r;
}

Sample draw_fay(Rng& g, int, const RunConfig& cfg) {
  Sample s;
  s.tau = draw_tau(g, cfg);
  for (;;) {
    const cplx u = draw_off_lattice(g, s.tau, 0.45 * s.tau.imag(), 0.1);
    const cplx z = draw_off_lattice(g, s.tau, 0.45 * s.tau.imag(), 0.1);
    if (lattice_distance(u - z, s.tau) < 0.1) continue;
    s.z = {u, z, draw_lambda(g, cfg, s.tau, 0.45)};
    return s;
  }
}

double eval_fay(const Sample& s, const RunConfig&) {
  return std::abs(fay_residual(s.z[0], s.z[1], s.z[2], EllipticParams(s.tau)));
}

Sample draw_duality(Rng& g, int i, const RunConfig& cfg) {
  Sample s;
  s.tau = draw_tau(g, cfg);
  s.z = {i == 0 ? cplx{0.0} : draw_lambda(g, cfg, s.tau, 0.45)};
  return s;
}

double eval_duality(const Sample& s, const RunConfig& cfg) {
  return duality_defect(expand_dual_basis(s.z[0], EllipticParams(s.tau), cfg.truncation));
}

LaurentSeries random_series(Rng& g, int lo, int hi) {
  std::vector<cplx> c(hi - lo + 1);
  for (auto& x : c) x = {uni(g, -1.0, 1.0), uni(g, -1.0, 1.0)};
  return LaurentSeries(lo, hi, std::move(c), false);
}

Sample draw_projection(Rng& g, int, const RunConfig& cfg) {
  Sample s;
  s.tau = draw_tau(g, cfg, 0.8, 1.5);
  s.z = {draw_lambda(g, cfg, s.tau, 0.45)};
  // coefficients of the test series ride along as complex numbers
  const int lo = -static_cast<int>(uni(g, 1.0, 5.0));
  s.variant = lo;
  const LaurentSeries r = random_series(g, lo, cfg.truncation);
  for (cplx c : r.coeffs()) s.z.push_back(c);
  return s;
}

double eval_projection(const Sample& s, const RunConfig& cfg) {
  const EllipticParams p(s.tau);
  const int N = cfg.truncation;
  const LaurentSeries series(s.variant, N, std::vector<cplx>(s.z.begin() + 1, s.z.end()), false);
  double worst = 0.0;
  for (cplx l : {s.z[0], cplx{0.0}}) {
    const DualBasisTable t = expand_dual_basis(l, p, N);
    const bool zero = l == cplx{0.0};
    const Projection P = zero ? Projection::plus_0 : Projection::plus_lambda;
    const Projection M = zero ? Projection::minus_0 : Projection::minus_lambda;
    const LaurentSeries sp = project(series, t, P);
    const LaurentSeries sm = project(series, t, M);
    const double scale = 1.0 + std::max(max_coeff_diff(sp, LaurentSeries::zero(0, 0, true)),
                                        max_coeff_diff(sm, LaurentSeries::zero(-1, -1, true)));
    worst = std::max(worst, max_coeff_diff((sp + sm).truncated(N), series) / scale);
    worst = std::max(worst, max_coeff_diff(project(sp, t, P), sp) / scale);
    worst = std::max(worst, max_coeff_diff(project(sm, t, M), sm.truncated(N)) / scale);
    worst = std::max(worst, max_coeff_diff(project(sm, t, P), LaurentSeries::zero(0, 0, true)) / scale);
    worst = std::max(worst, max_coeff_diff(project(sp, t, M), LaurentSeries::zero(-1, -1, true)) / scale);
  }
  return worst;
}

Sample draw_conv_k0(Rng& g, int i, const RunConfig& cfg) {
  Sample s;
  s.variant = i % static_cast<int>(k0_identities.size());
  const ConvolutionId id = k0_identities[s.variant];
  s.label = std::string(convolution_name(id));
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100000) throw DomainError("no sample with a resolvable contour; raise the quadrature node count");
    s.tau = draw_tau(g, cfg, 0.8, 1.5);
    const double R = std::min(1.0, std::abs(s.tau));
    const cplx u = std::polar(uni(g, 0.05, 0.9) * R, uni(g, 0.0, 2.0 * pi));
    const cplx v = std::polar(uni(g, 0.05, 0.9) * R, uni(g, 0.0, 2.0 * pi));
    const cplx l = draw_lambda(g, cfg, s.tau, 0.45);
    try {
      if (convolution_quadrature_bound(id, u, v, EllipticParams(s.tau), cfg.quadrature_nodes) > 1e-13) continue;
      s.z = {u, v, l};
      return s;
    } catch (const DomainError&) {
    }
  }
}

double eval_conv(const Sample& s, const RunConfig& cfg, bool cyl) {
  const ConvolutionId id = cyl ? cyl_identities[s.variant] : k0_identities[s.variant];
  return std::abs(convolution_residual(id, s.z[0], s.z[1], s.z[2], EllipticParams(s.tau), cfg.quadrature_nodes));
}

Sample draw_conv_cyl(Rng& g, int i, const RunConfig& cfg) {
  Sample s;
  s.variant = i % static_cast<int>(cyl_identities.size());
  const ConvolutionId id = cyl_identities[s.variant];
  s.label = std::string(convolution_name(id));
  for (int attempt = 0;; ++attempt) {
    if (attempt > 100000) throw DomainError("no sample with a resolvable contour; raise the quadrature node count");
    s.tau = draw_tau(g, cfg, 0.5, 1.5);
    const double T = s.tau.imag();
    const cplx u = draw_box(g, 0.5, -0.9 * T, 0.9 * T);
    const cplx v = draw_box(g, 0.5, -0.9 * T, 0.9 * T);
    const cplx l = draw_lambda(g, cfg, s.tau, 0.45);
    try {
      const EllipticParams p(s.tau);
      if (convolution_quadrature_bound(id, u, v, p, cfg.quadrature_nodes) > 1e-13) continue;
      if (lattice_distance(u - v, s.tau) < 0.05) continue;
      s.z = {u, v, l};
      return s;
    } catch (const DomainError&) {
    }
  }
}

Sample draw_strip_point(Rng& g, const RunConfig& cfg, bool upper) {
  Sample s;
  s.tau = draw_tau(g, cfg, 0.5, 1.5);
  const double T = s.tau.imag();
  const double y = uni(g, 0.1 * T, 0.9 * T);
  s.z = {cplx{uni(g, -0.5, 0.5), upper ? y : -y}, draw_lambda(g, cfg, s.tau, 0.45)};
  return s;
}

Sample draw_shift(Rng& g, int i, const RunConfig& cfg) {
  Sample s = draw_strip_point(g, cfg, true);
  s.variant = i % 2;
  s.label = s.variant == 0 ? "lambda kernel" : "no-lambda kernel";
  return s;
}

double eval_shift(const Sample& s, const RunConfig&) {
  const EllipticParams p(s.tau);
  const StripPoint w{s.z[0], Strip::upper};
  return std::abs(s.variant == 0 ? shift_residual(w, s.z[1], p) : shift_residual_g0(w, p));
}

Sample draw_heat(Rng& g, int i, const RunConfig& cfg) {
  const int v = i % 4;
  const bool minus = v % 2 == 1;
  Sample s = draw_strip_point(g, cfg, minus);
  s.variant = v;
  s.label = std::string(v < 2 ? "lambda" : "gamma") + (minus ? " sign -" : " sign +");
  return s;
}

double eval_heat(const Sample& s, const RunConfig&) {
  const EllipticParams p(s.tau);
  const bool minus = s.variant % 2 == 1;
  const StripPoint w{s.z[0], minus ? Strip::upper : Strip::lower};
  const std::optional<cplx> l = s.variant < 2 ? std::optional<cplx>(s.z[1]) : std::nullopt;
  return std::abs(heat_identity_residual(w, l, minus ? Sign::minus : Sign::plus, p));
}

Sample draw_three_points(Rng& g, const RunConfig& cfg) {
  Sample s;
  s.tau = draw_tau(g, cfg, 0.3, 1.5);
  for (;;) {
    const double b = 0.45 * s.tau.imag();
    const cplx a = draw_box(g, 0.5, -b, b), c = draw_box(g, 0.5, -b, b), d = draw_box(g, 0.5, -b, b);
    if (lattice_distance(a - c, s.tau) < 0.1 || lattice_distance(a - d, s.tau) < 0.1 ||
        lattice_distance(c - d, s.tau) < 0.1)
      continue;
    s.z = {a, c, d, draw_lambda(g, cfg, s.tau, 0.45)};
    return s;
  }
}

Sample draw_hhl(Rng& g, int, const RunConfig& cfg) { return draw_three_points(g, cfg); }

double eval_hhl(const Sample& s, const RunConfig&) {
  const EllipticParams p(s.tau);
  const cplx l = s.z[3];
  double r = 0.0;
  auto acc = [&](const Mat4& m) { r = std::max(r, hh_commutator(m).cwiseAbs().maxCoeff()); };
  acc(build_r(s.z[0], s.z[1], l, p).matrix());
  acc(build_dlambda_r(s.z[0], s.z[1], l, p).matrix());
  acc(l_slice(s.z[0], s.z[2], l, Sign::plus, p));
  acc(l_slice(s.z[0], s.z[2], l, Sign::minus, p));
  return r;
}

Sample draw_cdybe(Rng& g, int, const RunConfig& cfg) { return draw_three_points(g, cfg); }

double eval_cdybe(const Sample& s, const RunConfig&) {
  return cdybe_residual(s.z[0], s.z[1], s.z[2], s.z[3], EllipticParams(s.tau));
}

// Three values in [lo, hi] in increasing order, adjacent gaps of at least gap.
std::vector<double> ordered_triple(Rng& g, double lo, double hi, double gap) {
  for (;;) {
    std::vector<double> t{uni(g, lo, hi), uni(g, lo, hi), uni(g, lo, hi)};
    std::sort(t.begin(), t.end());
    if (t[1] - t[0] >= gap && t[2] - t[1] >= gap) return t;
  }
}

Sample draw_rll(Rng& g, int i, const RunConfig& cfg) {
  static const std::pair<Sign, Sign> pairs[4] = {
      {Sign::plus, Sign::plus}, {Sign::minus, Sign::minus}, {Sign::plus, Sign::minus}, {Sign::minus, Sign::plus}};
  Sample s;
  s.variant = i % 8;
  const auto sg = pairs[s.variant % 4];
  const bool cyl = s.variant >= 4;
  s.label = std::string(cyl ? "cyl" : "k0") + " (" + (sg.first == Sign::plus ? "+" : "-") + "," +
            (sg.second == Sign::plus ? "+" : "-") + ")";
  s.tau = draw_tau(g, cfg, 0.6, 1.5);
  const double T = s.tau.imag();
  const double R = std::min(1.0, std::abs(s.tau));
  // slot order (low, mid, high) of |.| or Im(.) for u, v, w per sign pair
  int iu, iv, iw;
  switch (s.variant % 4) {
    case 0: iw = 0; iv = 1; iu = 2; break;
    case 1: iv = 0; iu = 1; iw = 2; break;
    case 2: iv = 0; iw = 1; iu = 2; break;
    default: iu = 0; iw = 1; iv = 2; break;
  }
  if (cyl) {
    // strips order by Im in the reverse of the annulus radii
    const std::vector<double> h = ordered_triple(g, -0.45 * T, 0.45 * T, 0.1 * T);
    auto at = [&](int k) { return cplx{uni(g, -0.5, 0.5), h[2 - k]}; };
    const cplx u = at(iu), v = at(iv), w = at(iw);
    s.z = {u, v, w};
  } else {
    const std::vector<double> r = ordered_triple(g, 0.1 * R, 0.9 * R, 0.12 * R);
    auto at = [&](int k) { return std::polar(r[k], uni(g, 0.0, 2.0 * pi)); };
    const cplx u = at(iu), v = at(iv), w = at(iw);
    s.z = {u, v, w};
  }
  s.z.push_back(draw_lambda(g, cfg, s.tau, 0.45));
  return s;
}

double eval_rll(const Sample& s, const RunConfig&) {
  static const std::pair<Sign, Sign> pairs[4] = {
      {Sign::plus, Sign::plus}, {Sign::minus, Sign::minus}, {Sign::plus, Sign::minus}, {Sign::minus, Sign::plus}};
  return rll_residual(s.z[0], s.z[1], s.z[2], s.z[3], pairs[s.variant % 4], EllipticParams(s.tau),
                      s.variant >= 4 ? DomainPolicy::cyl : DomainPolicy::k0);
}

TrigParams draw_trig(Rng& g, const RunConfig& cfg) {
  TrigParams tp;
  tp.eta = cfg.eta ? *cfg.eta : cplx{uni(g, 0.7, 1.5), uni(g, -0.3, 0.3)};
  if (cfg.mu) {
    tp.mu = *cfg.mu;
  } else {
    const double im = uni(g, -0.2, 0.2);
    tp.mu = {tp.eta.imag() * im / tp.eta.real() + uni(g, 0.1, 0.9), im};
  }
  return tp;
}

Sample draw_cybe(Rng& g, int i, const RunConfig& cfg, char which) {
  Sample s;
  s.tau = {0.0, 0.0};
  const bool k0 = which != 'c' && i % 2 == 1;
  s.variant = which == 'a' ? (k0 ? 0 : 2) : which == 'b' ? (k0 ? 1 : 3) : 4;
  s.label = std::string(kind_name(static_cast<DegenerateKind>(s.variant)));
  double width = 1.0;
  TrigParams tp;
  if (which == 'c') {
    tp = draw_trig(g, cfg);
    width = (1.0 / tp.eta).real();
  }
  if (k0) {
    const std::vector<double> r = ordered_triple(g, 0.05, 0.9, 0.08);
    s.z = {std::polar(r[2], uni(g, 0.0, 2.0 * pi)), std::polar(r[1], uni(g, 0.0, 2.0 * pi)),
           std::polar(r[0], uni(g, 0.0, 2.0 * pi))};
  } else {
    const std::vector<double> h = ordered_triple(g, -0.45 * width, 0.45 * width, 0.08 * width);
    s.z = {cplx{uni(g, -0.5, 0.5), h[0]}, cplx{uni(g, -0.5, 0.5), h[1]}, cplx{uni(g, -0.5, 0.5), h[2]}};
  }
  s.z.push_back(tp.mu);
  s.z.push_back(tp.eta);
  return s;
}

double eval_cybe(const Sample& s, const RunConfig&) {
  return cybe_residual(static_cast<DegenerateKind>(s.variant), s.z[0], s.z[1], s.z[2], TrigParams{s.z[3], s.z[4]});
}

Sample draw_green_series(Rng& g, int i, const RunConfig& cfg) {
  Sample s;
  s.tau = draw_tau(g, cfg, 0.8, 1.5);
  const double R = std::min(1.0, std::abs(s.tau));
  s.z = {std::polar(uni(g, 0.2, 0.6) * R, uni(g, 0.0, 2.0 * pi)),
         i % 2 == 0 ? cplx{0.0} : draw_lambda(g, cfg, s.tau, 0.45)};
  return s;
}

double eval_green_series(const Sample& s, const RunConfig& cfg) {
  return green_series_check(s.z[1], EllipticParams(s.tau), std::max(4, std::min(cfg.truncation, 8)), s.z[0]);
}

const std::vector<Suite>& suite_table() {
  using namespace std::placeholders;
  static const std::vector<Suite> table = {
      {{"quasi-periodicity", "theta(u+1) = -theta(u), theta(u+tau) = -e^{-2 pi i u - pi i tau} theta(u), oddness, theta'(0) = 1", 1e-10},
       draw_quasi, eval_quasi},
      {{"fay", "degenerate Fay identity g_l(u-z) g_l(z) = g_l(u)(g0(u-z) + g0(z)) - d_l g_l(u)", 1e-9}, draw_fay, eval_fay},
      {{"duality", "<eps^{n;l}, eps_{m;l}> = delta_nm for the annulus dual bases (sample 0 at l = 0)", 1e-9},
       draw_duality, eval_duality},
      {{"projections", "P+ + P- = id, idempotency and orthogonality of P_l^+-, P^+-", 1e-10}, draw_projection, eval_projection},
      {{"convolution-k0", "annulus convolutions of G_l^+-, G by circle quadrature", 1e-8}, draw_conv_k0,
       [](const Sample& s, const RunConfig& c) { return eval_conv(s, c, false); }},
      {{"convolution-cyl", "cylinder convolutions of the strip kernels with d_l and gamma corrections", 1e-8},
       draw_conv_cyl, [](const Sample& s, const RunConfig& c) { return eval_conv(s, c, true); }},
      {{"shift", "G_l^+(w - tau) = e^{2 pi i l} G_l^-(w) and G(w - tau) = 2 pi i - G(-w), Fourier sums", 1e-9},
       draw_shift, eval_shift},
      {{"heat", "(1/2 pi i) d_w d_l G_l^+- = d_tau G_l^+- and (1/4 pi i) d_w gamma = d_tau G", 1e-8}, draw_heat, eval_heat},
      {{"hhl", "[H (x) 1 + 1 (x) H, r] = 0 for r-matrices, their l-derivatives and L-slices", 1e-300}, draw_hhl, eval_hhl},
      {{"cdybe", "classical dynamical Yang-Baxter equation in the evaluation representation", 1e-8}, draw_cdybe, eval_cdybe},
      {{"rll", "rLL relations at central charge 0 for all sign pairs, annulus and strip orderings", 1e-8}, draw_rll, eval_rll},
      {{"cybe-a", "classical Yang-Baxter equation for the rational r-matrices", 1e-8},
       [](Rng& g, int i, const RunConfig& c) { return draw_cybe(g, i, c, 'a'); }, eval_cybe},
      {{"cybe-b", "classical Yang-Baxter equation for the trigonometric r-matrices", 1e-8},
       [](Rng& g, int i, const RunConfig& c) { return draw_cybe(g, i, c, 'b'); }, eval_cybe},
      {{"cybe-c", "classical Yang-Baxter equation for the cth / Psi_mu r-matrix", 1e-8},
       [](Rng& g, int i, const RunConfig& c) { return draw_cybe(g, i, c, 'c'); }, eval_cybe},
      {{"green-series", "Taylor coefficients of G_l(u - z) in z equal (-1)^n eps^{n;l}(u)", 1e-9}, draw_green_series,
       eval_green_series},
  };
  return table;
}

const Suite& find(std::string_view name) {
  for (const auto& s : suite_table())
    if (s.info.name == name) return s;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string sample_inputs(const Suite& s, const Sample& x) {
  const std::string_view n = s.info.name;
  if (n == "quasi-periodicity") return describe(x, {"u"});
  if (n == "fay") return describe(x, {"u", "z", "lambda"});
  if (n == "duality") return describe(x, {"lambda"});
  if (n == "projections") return describe(x, {"lambda"}) + " min_deg=" + std::to_string(x.variant);
  if (n == "convolution-k0" || n == "convolution-cyl") return describe(x, {"u", "v", "lambda"});
  if (n == "shift" || n == "heat") return describe(x, {"w", "lambda"});
  if (n == "hhl" || n == "cdybe") return describe(x, {"u1", "u2", "u3", "lambda"});
  if (n == "rll") return describe(x, {"u", "v", "w", "lambda"});
  if (n.substr(0, 4) == "cybe") {
    std::ostringstream os;
    os << x.label << " u1=" << format_complex(x.z[0]) << " u2=" << format_complex(x.z[1])
       << " u3=" << format_complex(x.z[2]) << " mu=" << format_complex(x.z[3]) << " eta=" << format_complex(x.z[4]);
    return os.str();
  }
  if (n == "green-series") return describe(x, {"u", "lambda"});
  return describe(x, {});
}

}  // namespace

void validate_config(const RunConfig& cfg) {
  if (cfg.samples < 1) throw DomainError("samples must be >= 1");
  if (cfg.quadrature_nodes < 32) throw DomainError("quadrature nodes must be >= 32");
  if (cfg.truncation < 4 || cfg.truncation > 40) throw DomainError("truncation must lie in [4, 40]");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw DomainError("tolerance must be positive");
  if (cfg.tau) EllipticParams{*cfg.tau};
  if (cfg.tau && cfg.lambda) {
    if (!(std::abs(cfg.lambda->imag()) < cfg.tau->imag()))
      throw DomainError("lambda outside the band |Im lambda| < Im tau");
    if (lattice_distance(*cfg.lambda, *cfg.tau) <= default_pole_margin)
      throw NearPole(NearPole::Where::lambda, "lambda lies on the lattice Z + tau Z");
  }
  if (cfg.eta && !(cfg.eta->real() > 0.0)) throw DomainError("eta must satisfy Re eta > 0");
  if (cfg.mu) require_zone(*cfg.mu, cfg.eta ? *cfg.eta : cplx{1.0});
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["identity"] = identity;
  j["seed"] = seed;
  j["samples"] = samples;
  j["tolerance"] = tolerance;
  j["max_residual"] = max_residual;
  j["mean_residual"] = mean_residual;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : failures) {
    nlohmann::ordered_json e;
    e["inputs"] = f.inputs;
    e["residual"] = f.residual;
    if (!f.error.empty()) e["error"] = f.error;
    j["failures"].push_back(e);
  }
  j["passed"] = passed;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream os;
  os << "suite,seed,samples,tolerance,max_residual,mean_residual,failures,passed\n";
  os << suite << "," << seed << "," << samples << "," << format_double(tolerance) << "," << format_double(max_residual)
     << "," << format_double(mean_residual) << "," << failures.size() << "," << (passed ? "true" : "false") << "\n";
  return os.str();
}

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> v;
    for (const auto& s : suite_table()) v.push_back(s.info);
    return v;
  }();
  return infos;
}

const SuiteInfo& find_suite(std::string_view name) { return find(name).info; }

VerificationReport run_suite(std::string_view name, const RunConfig& cfg, bool parallel) {
  const Suite& suite = find(name);
  validate_config(cfg);
  Rng rng(cfg.seed);
  std::vector<Sample> samples;
  samples.reserve(cfg.samples);
  for (int i = 0; i < cfg.samples; ++i) samples.push_back(suite.draw(rng, i, cfg));

  struct Outcome {
    double residual = 0.0;
    std::string error;
  };
  auto evaluate = [&](std::size_t i) {
    Outcome o;
    try {
      o.residual = suite.eval(samples[i], cfg);
      if (std::isnan(o.residual)) o.residual = std::numeric_limits<double>::infinity();
    } catch (const std::exception& e) {
      o.residual = std::numeric_limits<double>::infinity();
      o.error = e.what();
    }
    return o;
  };
  const std::vector<Outcome> out =
      parallel ? parallel_map(samples.size(), evaluate) : serial_map(samples.size(), evaluate);

  VerificationReport r;
  r.suite = std::string(suite.info.name);
  r.identity = std::string(suite.info.identity);
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  r.tolerance = cfg.tol ? *cfg.tol : suite.info.default_tol;
  double sum = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    r.max_residual = std::max(r.max_residual, out[i].residual);
    sum += out[i].residual;
    if (!(out[i].residual < r.tolerance))
      r.failures.push_back({sample_inputs(suite, samples[i]), out[i].residual, out[i].error});
  }
  r.mean_residual = sum / static_cast<double>(out.size());
  r.passed = r.max_residual < r.tolerance && r.failures.empty();
  return r;
}

}  // namespace ellr
