#include "ellr/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ellr/errors.hpp"

namespace ellr {

namespace {

void check_cfg(const AveragingConfig& cfg) {
  if (cfg.N < 0) throw std::invalid_argument("N must be >= 0");
}

void require_lambda_band(cplx lambda, const EllipticParams& p) {
  const double T = p.tau().imag();
  if (!(lambda.imag() < 0.0 && lambda.imag() > -T))
    throw DomainError("lambda outside the band -Im tau < Im lambda < 0");
}

cplx require_term_pole_free(cplx u, int n, const EllipticParams& p) {
  const cplx w = u - static_cast<double>(n) * p.tau();
  if (std::abs(w - std::round(w.real())) <= default_pole_margin)
    throw NearPole(NearPole::Where::argument, "u - n tau hits a pole at n = " + std::to_string(n));
  return w;
}

// e^A pi (ctg(pi w) + c i), c = +1 or -1, with the phase merged into single exponentials.
cplx twisted_ctg(cplx A, cplx w, double c) {
  const cplx z = pi * w;
  if (z.imag() < 0.0) {
    // ctg z = i + 2i y/(1-y), y = e^{-2iz}
    const cplx y = std::exp(-2.0 * I * z);
    cplx v = 2.0 * I * std::exp(A - 2.0 * I * z) / (1.0 - y);
    if (c > 0) v += 2.0 * I * std::exp(A);
    return pi * v;
  }
  // ctg z = -i - 2i x/(1-x), x = e^{2iz}
  const cplx x = std::exp(2.0 * I * z);
  cplx v = -2.0 * I * std::exp(A + 2.0 * I * z) / (1.0 - x);
  if (c < 0) v -= 2.0 * I * std::exp(A);
  return pi * v;
}

// pi ctg(pi w) without the constant, i.e. pi(ctg(pi w) -/+ i) on either half-plane.
cplx ctg_remainder(cplx w) {
  const cplx z = pi * w;
  if (z.imag() < 0.0) {
    const cplx y = std::exp(-2.0 * I * z);
    return pi * 2.0 * I * y / (1.0 - y);
  }
  const cplx x = std::exp(2.0 * I * z);
  return -pi * 2.0 * I * x / (1.0 - x);
}

double const_sign(cplx w) { return (pi * w).imag() < 0.0 ? 1.0 : -1.0; }

template <class Term>
cplx symmetric_sum(int N, TailMode mode, Term term) {
  if (mode == TailMode::one_sided) {
    cplx s{0.0};
    for (int n = 0; n <= N; ++n) s += term(n);
    return s;
  }
  if (mode == TailMode::plain) {
    cplx s{0.0};
    for (int n = -N; n <= N; ++n) s += term(n);
    return s;
  }
  cplx s = term(0);
  for (int n = 1; n <= N; ++n) s += term(n) + term(-n);
  return s;
}

}  // namespace

cplx vp_ctg_sum(cplx u, const EllipticParams& p, const AveragingConfig& cfg) {
  check_cfg(cfg);
  for (int n = -cfg.N; n <= cfg.N; ++n) require_term_pole_free(u, n, p);
  auto w_of = [&](int n) { return u - static_cast<double>(n) * p.tau(); };
  if (cfg.tail != TailMode::paired)
    return symmetric_sum(cfg.N, cfg.tail, [&](int n) {
      const cplx w = w_of(n);
      return pi * I * const_sign(w) + ctg_remainder(w);
    });
  // the +-pi i limits of a pair are added as integers first, so they cancel exactly
  cplx s = pi * I * const_sign(w_of(0)) + ctg_remainder(w_of(0));
  for (int n = 1; n <= cfg.N; ++n) {
    const double c = const_sign(w_of(n)) + const_sign(w_of(-n));
    s += ctg_remainder(w_of(n)) + ctg_remainder(w_of(-n)) + pi * I * c;
  }
  return s;
}

cplx vp_glambda_sum(cplx u, cplx lambda, Sign sign, const EllipticParams& p, const AveragingConfig& cfg) {
  check_cfg(cfg);
  require_lambda_band(lambda, p);
  const double s = sign == Sign::plus ? -1.0 : 1.0;
  const double c = sign == Sign::plus ? 1.0 : -1.0;
  return symmetric_sum(cfg.N, cfg.tail, [&](int n) {
    const cplx w = require_term_pole_free(u, n, p);
    return twisted_ctg(s * 2.0 * pi * I * static_cast<double>(n) * lambda, w, c);
  });
}

RMatrix4 average_rmatrix_elliptic(cplx u, cplx lambda, const EllipticParams& p, const AveragingConfig& cfg,
                                  bool theta_switch, TrigRepr repr) {
  check_cfg(cfg);
  require_lambda_band(lambda, p);
  auto term = [&](int n) {
    const cplx w = require_term_pole_free(u, n, p);
    const bool plus = !theta_switch || n >= 0;
    const cplx A = 2.0 * pi * I * static_cast<double>(n) * lambda;
    cplx psi, e23, e32;
    if (repr == TrigRepr::closed) {
      if (plus ? !(w.imag() < 0.0) : !(w.imag() > 0.0))
        throw DomainError(std::string("term n = ") + std::to_string(n) + " lies outside the half-plane of psi~" +
                          (plus ? "+" : "-"));
      psi = pi * I * const_sign(w) + ctg_remainder(w);
      e23 = twisted_ctg(A, w, -1.0);
      e32 = twisted_ctg(-A, w, 1.0);
    } else {
      psi = psi_tilde_series(w, plus, psi_tilde_terms(w));
      e23 = std::exp(A) * (-pi * I + psi);
      e32 = std::exp(-A) * (pi * I + psi);
    }
    return RMatrix4{0.5 * psi, -0.5 * psi, -0.5 * psi, 0.5 * psi, e23, e32};
  };
  RMatrix4 s{};
  if (cfg.tail == TailMode::one_sided) {
    for (int n = 0; n <= cfg.N; ++n) s += term(n);
  } else if (cfg.tail == TailMode::plain) {
    for (int n = -cfg.N; n <= cfg.N; ++n) s += term(n);
  } else {
    s = term(0);
    for (int n = 1; n <= cfg.N; ++n) {
      RMatrix4 pair = term(n);
      pair += term(-n);
      s += pair;
    }
  }
  return s;
}

cplx rational_to_trig_target(cplx u, cplx mu, cplx eta) {
  const cplx a = 2.0 * pi * eta * u;
  if (a.real() <= 0.0) return 2.0 * pi * eta * std::exp(mu * a) / (std::exp(a) - 1.0);
  return 2.0 * pi * eta * std::exp((mu - 1.0) * a) / (1.0 - std::exp(-a));
}

namespace {

void require_rational_inputs(cplx u, cplx mu, cplx eta, int N) {
  require_zone(mu, eta);
  if (mu.imag() != 0.0) throw DomainError("the rational sum needs real mu; its terms grow like e^{2 pi |Im mu| n}");
  for (int n = -N; n <= N; ++n)
    if (std::abs(u - I * static_cast<double>(n) / eta) <= default_pole_margin)
      throw NearPole(NearPole::Where::argument, "u - i n/eta hits a pole at n = " + std::to_string(n));
}

template <class Term>
cplx rational_sum(int N, TailMode mode, Term term) {
  if (mode != TailMode::paired) return symmetric_sum(N, mode, term);
  cplx s = term(0);
  for (int n = 1; n <= N; ++n) s += (n == N ? 0.5 : 1.0) * (term(n) + term(-n));
  return s;
}

}  // namespace

cplx vp_rational_to_trig(cplx u, cplx mu, cplx eta, const AveragingConfig& cfg) {
  check_cfg(cfg);
  require_rational_inputs(u, mu, eta, cfg.N);
  return rational_sum(cfg.N, cfg.tail, [&](int n) {
    const double x = static_cast<double>(n);
    return std::exp(2.0 * pi * I * mu * x) / (u - I * x / eta);
  });
}

RMatrix4 average_rmatrix_c(cplx u, cplx mu, cplx eta, const AveragingConfig& cfg) {
  check_cfg(cfg);
  require_rational_inputs(u, mu, eta, cfg.N);
  auto phi = [&](int n) { return 1.0 / (u - I * static_cast<double>(n) / eta); };
  const cplx diag = rational_sum(cfg.N, cfg.tail, phi);
  const cplx e23 = rational_sum(cfg.N, cfg.tail, [&](int n) {
    return std::exp(2.0 * pi * I * mu * static_cast<double>(n)) * phi(n);
  });
  const cplx e32 = rational_sum(cfg.N, cfg.tail, [&](int n) {
    return std::exp(-2.0 * pi * I * mu * static_cast<double>(n)) * phi(n);
  });
  return RMatrix4{0.5 * diag, -0.5 * diag, -0.5 * diag, 0.5 * diag, e23, e32};
}

int default_elliptic_N(cplx u, std::optional<cplx> lambda, const EllipticParams& p, double tol) {
  const double T = p.tau().imag();
  double margin = T;
  if (lambda) margin = std::min(std::abs(lambda->imag()), T - std::abs(lambda->imag()));
  if (!(margin > 0.0)) throw DomainError("lambda on the edge of its band");
  const double n = (std::log(1.0 / tol) + 2.0 * pi * std::abs(u.imag()) + std::log(4.0 * pi)) / (2.0 * pi * margin);
  return static_cast<int>(std::min(1e5, std::ceil(n) + 1));
}

int default_rational_N(double tol) { return static_cast<int>(std::min(1e5, std::ceil(10.0 / tol))); }

}  // namespace ellr
