#include "ellr/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ellr/errors.hpp"

namespace ellr {

namespace {

void require_off_lattice(cplx w, const EllipticParams& p, double margin, NearPole::Where where, const char* name) {
  if (lattice_distance(w, p.tau()) <= margin)
    throw NearPole(where, std::string(name) + " lies within the pole margin of the lattice Z + tau Z");
}

// e^A / (1 - e^E), evaluated without overflow for either sign of Re E.
cplx exp_over_one_minus_exp(cplx A, cplx E) {
  if (E.real() <= 0.0) return std::exp(A) / (1.0 - std::exp(E));
  return -std::exp(A - E) / (1.0 - std::exp(-E));
}

// e^A e^E / (1 - e^E)^2, symmetric under E -> -E.
cplx exp_times_h(cplx A, cplx E) {
  if (E.real() > 0.0) E = -E;
  const cplx d = 1.0 - std::exp(E);
  return std::exp(A + E) / (d * d);
}

void require_sign_strip(const StripPoint& w, Sign sign, const EllipticParams& p) {
  const Strip want = sign == Sign::plus ? Strip::lower : Strip::upper;
  if (w.strip != want)
    throw DomainError(sign == Sign::plus ? "sign + needs a point declared on the LOWER strip"
                                         : "sign - needs a point declared on the UPPER strip");
  validate_strip(w, p);
}

void require_band(cplx lambda, const EllipticParams& p) {
  if (!(std::abs(lambda.imag()) < p.tau().imag()))
    throw DomainError("lambda outside the band |Im lambda| < Im tau");
}

}  // namespace

double strip_margin(const StripPoint& s, const EllipticParams& p) {
  const double y = s.w.imag();
  const double t = p.tau().imag();
  switch (s.strip) {
    case Strip::lower: return std::min(-y, y + t);
    case Strip::upper: return std::min(y, t - y);
    default: return std::abs(y);
  }
}

void validate_strip(const StripPoint& s, const EllipticParams& p, double margin_fraction) {
  if (s.strip == Strip::none) return;
  if (!(strip_margin(s, p) >= margin_fraction * p.tau().imag()))
    throw DomainError(s.strip == Strip::lower ? "point not inside the LOWER strip -Im tau < Im w < 0 with margin"
                                              : "point not inside the UPPER strip 0 < Im w < Im tau with margin");
}

void validate_annulus(const AnnulusPair& a, const EllipticParams& p) {
  const double R = std::min(1.0, std::abs(p.tau()));
  const double au = std::abs(a.u), az = std::abs(a.z);
  if (!(au < R && az < R && au > 0.0 && az > 0.0))
    throw DomainError("annulus points must satisfy 0 < |u|, |z| < min(1, |tau|)");
  const bool ok = a.order == AnnulusOrder::outer ? au > az * (1.0 + 1e-3) : az > au * (1.0 + 1e-3);
  if (!ok) throw DomainError(a.order == AnnulusOrder::outer ? "annulus order |u| > |z| violated" : "annulus order |u| < |z| violated");
}

cplx g0(cplx w, const EllipticParams& p, double pole_margin) {
  require_off_lattice(w, p, pole_margin, NearPole::Where::argument, "w");
  const ThetaDerivs d = theta_derivs_auto(w, p);
  return d.d1 / d.d0;
}

cplx g_lambda(cplx w, cplx lambda, const EllipticParams& p, double pole_margin) {
  require_off_lattice(w, p, pole_margin, NearPole::Where::argument, "w");
  require_off_lattice(lambda, p, pole_margin, NearPole::Where::lambda, "lambda");
  return theta_derivs_auto(w + lambda, p).d0 / (theta_derivs_auto(w, p).d0 * theta_derivs_auto(lambda, p).d0);
}

cplx dlambda_g_lambda(cplx w, cplx lambda, const EllipticParams& p, double pole_margin) {
  require_off_lattice(w, p, pole_margin, NearPole::Where::argument, "w");
  require_off_lattice(lambda, p, pole_margin, NearPole::Where::lambda, "lambda");
  const ThetaDerivs A = theta_derivs_auto(w + lambda, p);
  const ThetaDerivs B = theta_derivs_auto(w, p);
  const ThetaDerivs C = theta_derivs_auto(lambda, p);
  return (A.d1 * C.d0 - A.d0 * C.d1) / (B.d0 * C.d0 * C.d0);
}

cplx dw_dlambda_g_lambda(cplx w, cplx lambda, const EllipticParams& p, double pole_margin) {
  require_off_lattice(w, p, pole_margin, NearPole::Where::argument, "w");
  require_off_lattice(lambda, p, pole_margin, NearPole::Where::lambda, "lambda");
  const ThetaDerivs A = theta_derivs_auto(w + lambda, p);
  const ThetaDerivs B = theta_derivs_auto(w, p);
  const ThetaDerivs C = theta_derivs_auto(lambda, p);
  const cplx num = (A.d2 * C.d0 - A.d1 * C.d1) * B.d0 - (A.d1 * C.d0 - A.d0 * C.d1) * B.d1;
  return num / (B.d0 * B.d0 * C.d0 * C.d0);
}

cplx gamma_fourier_band(cplx w, const EllipticParams& p, int N) {
  if (!(std::abs(w.imag()) < p.tau().imag())) throw DomainError("gamma expansion needs |Im w| < Im tau");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  const cplx tau = p.tau();
  cplx s{0.0};
  for (int n = N; n >= 1; --n)
    for (int sg : {1, -1}) {
      const double m = sg * n;
      s += exp_times_h(-2.0 * pi * I * m * w, 2.0 * pi * I * m * tau);
    }
  return -2.0 * pi * pi + 8.0 * pi * pi * s;
}

int gamma_band_terms(cplx w, const EllipticParams& p, double tol) {
  const double m = p.tau().imag() - std::abs(w.imag());
  if (!(m > 0.0)) throw DomainError("gamma expansion needs |Im w| < Im tau");
  const double n = (std::log(1.0 / tol) + std::log(8.0 * pi * pi)) / (2.0 * pi * m);
  return static_cast<int>(std::min<double>(fourier_term_cap, std::ceil(n) + 2));
}

cplx gamma_fourier(const StripPoint& w, const EllipticParams& p, int N) {
  if (w.strip != Strip::lower) throw DomainError("gamma expansion needs a point declared on the LOWER strip");
  validate_strip(w, p);
  return gamma_fourier_band(w.w, p, N);
}

cplx dw_gamma_fourier(const StripPoint& w, const EllipticParams& p, int N) {
  if (w.strip != Strip::lower) throw DomainError("gamma expansion needs a point declared on the LOWER strip");
  validate_strip(w, p);
  const cplx tau = p.tau();
  cplx s{0.0};
  for (int n = N; n >= 1; --n)
    for (int sg : {1, -1}) {
      const double m = sg * n;
      s += -2.0 * pi * I * m * exp_times_h(-2.0 * pi * I * m * w.w, 2.0 * pi * I * m * tau);
    }
  return 8.0 * pi * pi * s;
}

cplx gamma_closed(cplx w, const EllipticParams& p) {
  const ThetaDerivs z = theta_derivs_auto(0.0, p);
  const cplx c = -(z.d3 + 4.0 * pi * pi) / 3.0;
  if (std::abs(w) < 1e-9) return z.d3 + c;
  const ThetaDerivs d = theta_derivs_auto(w, p);
  return d.d2 / d.d0 + c;
}

cplx fourier_G_coefficient(int n, std::optional<cplx> lambda, Sign sign, const EllipticParams& p) {
  const cplx tau = p.tau();
  if (lambda) {
    const cplx E = 2.0 * pi * I * (static_cast<double>(n) * tau - *lambda);
    if (sign == Sign::plus) return 2.0 * pi * I * exp_over_one_minus_exp(0.0, E);
    return -2.0 * pi * I * exp_over_one_minus_exp(0.0, -E);
  }
  if (n == 0) return sign == Sign::plus ? pi * I : -pi * I;
  const cplx E = 2.0 * pi * I * static_cast<double>(n) * tau;
  if (sign == Sign::plus) return 2.0 * pi * I * exp_over_one_minus_exp(0.0, E);
  return -2.0 * pi * I * exp_over_one_minus_exp(0.0, -E);
}

cplx fourier_G_cyl(const StripPoint& w, std::optional<cplx> lambda, Sign sign, const EllipticParams& p, int N) {
  require_sign_strip(w, sign, p);
  if (lambda) require_band(*lambda, p);
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  const cplx tau = p.tau();
  const cplx c = sign == Sign::plus ? 2.0 * pi * I : -2.0 * pi * I;
  const double flip = sign == Sign::plus ? 1.0 : -1.0;
  cplx s{0.0};
  for (int k = N; k >= 0; --k)
    for (int sg : {1, -1}) {
      if (k == 0 && sg == -1) continue;
      const double n = sg * k;
      const cplx A = -2.0 * pi * I * n * w.w;
      if (lambda) {
        s += c * exp_over_one_minus_exp(A, flip * 2.0 * pi * I * (n * tau - *lambda));
      } else if (k == 0) {
        s += c * 0.5;
      } else {
        s += c * exp_over_one_minus_exp(A, flip * 2.0 * pi * I * n * tau);
      }
    }
  return s;
}

cplx dtau_fourier_G_cyl(const StripPoint& w, std::optional<cplx> lambda, Sign sign, const EllipticParams& p, int N) {
  require_sign_strip(w, sign, p);
  if (lambda) require_band(*lambda, p);
  const cplx tau = p.tau();
  cplx s{0.0};
  for (int k = N; k >= 1; --k)
    for (int sg : {1, -1}) {
      const double n = sg * k;
      const cplx A = -2.0 * pi * I * n * w.w;
      const cplx E = lambda ? 2.0 * pi * I * (n * tau - *lambda) : 2.0 * pi * I * n * tau;
      s += 2.0 * pi * I * 2.0 * pi * I * n * exp_times_h(A, E);
    }
  return s;
}

int fourier_terms(const StripPoint& w, std::optional<cplx> lambda, const EllipticParams& p, double tol) {
  const double m = strip_margin(w, p);
  if (!(m > 0.0)) throw DomainError("point is not strictly inside its strip");
  const double extra = lambda ? 2.0 * pi * std::abs(lambda->imag()) : 0.0;
  const double n = (std::log(1.0 / tol) + extra + std::log(8.0 * pi * pi)) / (2.0 * pi * m);
  return static_cast<int>(std::min<double>(fourier_term_cap, std::ceil(n) + 2));
}

cplx fay_residual(cplx u, cplx z, cplx lambda, const EllipticParams& p) {
  const cplx lhs = g_lambda(u - z, lambda, p) * g_lambda(z, lambda, p);
  const cplx gu = g_lambda(u, lambda, p);
  const cplx rhs = gu * g0(u - z, p) + gu * g0(z, p) - dlambda_g_lambda(u, lambda, p);
  return lhs - rhs;
}

cplx heat_identity_residual(const StripPoint& w, std::optional<cplx> lambda, Sign sign, const EllipticParams& p) {
  const int N = fourier_terms(w, lambda, p);
  const cplx dtau = dtau_fourier_G_cyl(w, lambda, sign, p, N);
  if (lambda) return dw_dlambda_g_lambda(w.w, *lambda, p) / (2.0 * pi * I) - dtau;
  cplx dg;
  if (sign == Sign::plus) {
    dg = dw_gamma_fourier(w, p, N);
  } else {
    // gamma is even, so gamma'(w) = -gamma'(-w) with -w on the lower strip
    dg = -dw_gamma_fourier(StripPoint{-w.w, Strip::lower}, p, N);
  }
  return dg / (4.0 * pi * I) - dtau;
}

cplx shift_residual(const StripPoint& w, cplx lambda, const EllipticParams& p) {
  if (w.strip != Strip::upper) throw DomainError("shift identity needs a point declared on the UPPER strip");
  const StripPoint shifted{w.w - p.tau(), Strip::lower};
  const int N = std::max(fourier_terms(w, lambda, p), fourier_terms(shifted, lambda, p));
  return fourier_G_cyl(shifted, lambda, Sign::plus, p, N) -
         std::exp(2.0 * pi * I * lambda) * fourier_G_cyl(w, lambda, Sign::minus, p, N);
}

cplx shift_residual_g0(const StripPoint& w, const EllipticParams& p) {
  if (w.strip != Strip::upper) throw DomainError("shift identity needs a point declared on the UPPER strip");
  const StripPoint shifted{w.w - p.tau(), Strip::lower};
  const StripPoint reflected{-w.w, Strip::lower};
  const int N = std::max(fourier_terms(w, std::nullopt, p), fourier_terms(shifted, std::nullopt, p));
  return fourier_G_cyl(shifted, std::nullopt, Sign::plus, p, N) -
         (2.0 * pi * I - fourier_G_cyl(reflected, std::nullopt, Sign::plus, p, N));
}

}  // namespace ellr
