#include "ellr/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ellr/complex_io.hpp"
#include "ellr/errors.hpp"

namespace ellr {

EllipticParams::EllipticParams(cplx tau, double series_tol, int max_terms)
    : tau_(tau), series_tol_(series_tol), max_terms_(max_terms) {
  if (!(tau.imag() > 0.0) || !std::isfinite(tau.real()))
    throw InvalidModulus("modulus must satisfy Im(tau) > 0, got tau = " + format_complex(tau));
  if (!(series_tol > 0.0) || max_terms < 1) throw std::invalid_argument("series_tol > 0 and max_terms >= 1 required");
  q_ = std::exp(I * pi * tau);
  if (!(std::abs(q_) < 1.0)) throw InvalidModulus("nome |q| >= 1");
}

namespace detail {

// Taylor coefficients theta^(j)(u0)/j!, j = 0..order, straight from the sine series.
// u0 is expected to be already reduced into the fundamental cell.
std::vector<cplx> series_taylor(cplx u0, const EllipticParams& p, int order) {
  const cplx tau = p.tau();
  const double log_q = std::log(std::abs(p.q()));
  const double y = std::abs(u0.imag());
  std::vector<cplx> num(order + 1, cplx{0.0});
  cplx den{0.0};

  auto bound = [&](int n) {
    const double k = (2 * n + 1) * pi;
    double w = 1.0, wmax = 1.0;
    for (int j = 1; j <= std::max(order, 1); ++j) {
      w *= k / j;
      wmax = std::max(wmax, w);
    }
    return std::exp(n * (n + 1.0) * log_q + k * y) * wmax;
  };

  for (int n = 0;; ++n) {
    if (n >= p.max_terms())
      throw TruncationOverflow("theta series did not reach tolerance within " + std::to_string(p.max_terms()) +
                               " terms; use the modular path");
    const double k = (2 * n + 1) * pi;
    const cplx a = ((n % 2) ? -1.0 : 1.0) * std::exp(I * pi * tau * static_cast<double>(n * (n + 1)));
    const cplx s = std::sin(k * u0);
    const cplx c = std::cos(k * u0);
    double w = 1.0;
    for (int j = 0; j <= order; ++j) {
      cplx phase;
      switch (j % 4) {
        case 0: phase = s; break;
        case 1: phase = c; break;
        case 2: phase = -s; break;
        default: phase = -c; break;
      }
      num[j] += a * w * phase;
      w *= k / (j + 1);
    }
    den += a * k;
    if (bound(n + 1) < p.series_tol()) break;
  }
  for (auto& v : num) v /= den;
  return num;
}

struct Reduction {
  cplx u0;
  cplx log_factor;  // theta(u) = sign * exp(log_factor) * theta(u0)
  double sign;
  cplx slope;  // d/du of log_factor
};

Reduction reduce(cplx u, cplx tau) {
  const double m = std::round(u.imag() / tau.imag());
  const cplx u1 = u - m * tau;
  const double n = std::round(u1.real());
  const cplx u0 = u1 - n;
  const bool odd = std::fmod(std::abs(m + n), 2.0) == 1.0;
  return {u0, -2.0 * pi * I * m * u0 - pi * I * m * m * tau, odd ? -1.0 : 1.0, -2.0 * pi * I * m};
}

std::vector<cplx> reduced_taylor(cplx u, const EllipticParams& p, int order) {
  const Reduction r = reduce(u, p.tau());
  const std::vector<cplx> t = series_taylor(r.u0, p, order);
  const cplx f = r.sign * std::exp(r.log_factor);
  // theta(u+h) = f e^{slope h} theta(u0+h)
  std::vector<cplx> e(order + 1);
  e[0] = 1.0;
  for (int k = 1; k <= order; ++k) e[k] = e[k - 1] * r.slope / static_cast<double>(k);
  std::vector<cplx> out(order + 1, cplx{0.0});
  for (int k = 0; k <= order; ++k)
    for (int j = 0; j <= k; ++j) out[k] += e[k - j] * t[j];
  for (auto& v : out) v *= f;
  return out;
}

ThetaDerivs to_derivs(const std::vector<cplx>& t) { return {t[0], t[1], 2.0 * t[2], 6.0 * t[3]}; }

void check_finite(const ThetaDerivs& d) {
  for (cplx v : {d.d0, d.d1, d.d2, d.d3})
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw TruncationOverflow("theta value outside double range");
}

ThetaDerivs modular_derivs(cplx u, cplx tau, const EllipticParams& p, int depth) {
  tau -= std::round(tau.real());  // the normalized theta is invariant under tau -> tau+1
  if (tau.imag() >= modular_threshold || depth > 16) return to_derivs(reduced_taylor(u, p.with_tau(tau), 3));
  const double n = std::round(u.real());
  const double sgn = std::fmod(std::abs(n), 2.0) == 1.0 ? -1.0 : 1.0;
  u -= n;
  // theta(u|tau) = -tau exp(-i pi u^2/tau) theta(-u/tau | -1/tau)
  const cplx tp = -1.0 / tau;
  const ThetaDerivs g = modular_derivs(-u / tau, tp, p, depth + 1);
  const cplx s = -1.0 / tau;
  const cplx b = -I * pi / tau;
  const cplx e0 = -tau * std::exp(b * u * u);
  const cplx e1 = 2.0 * b * u * e0;
  const cplx e2 = (2.0 * b + 4.0 * b * b * u * u) * e0;
  const cplx e3 = (12.0 * b * b * u + 8.0 * b * b * b * u * u * u) * e0;
  const cplx g0 = g.d0, g1 = s * g.d1, g2 = s * s * g.d2, g3 = s * s * s * g.d3;
  ThetaDerivs out{e0 * g0, e1 * g0 + e0 * g1, e2 * g0 + 2.0 * e1 * g1 + e0 * g2,
                  e3 * g0 + 3.0 * e2 * g1 + 3.0 * e1 * g2 + e0 * g3};
  out.d0 *= sgn;
  out.d1 *= sgn;
  out.d2 *= sgn;
  out.d3 *= sgn;
  return out;
}

}  // namespace detail

cplx theta(cplx u, const EllipticParams& p) { return detail::reduced_taylor(u, p, 0)[0]; }

ThetaDerivs theta_derivs(cplx u, const EllipticParams& p) {
  return detail::to_derivs(detail::reduced_taylor(u, p, 3));
}

cplx theta_small_imtau(cplx u, const EllipticParams& p) { return theta_derivs_small_imtau(u, p).d0; }

ThetaDerivs theta_derivs_small_imtau(cplx u, const EllipticParams& p) {
  const ThetaDerivs d = detail::modular_derivs(u, p.tau(), p, 0);
  detail::check_finite(d);
  return d;
}

ThetaDerivs theta_derivs_auto(cplx u, const EllipticParams& p) {
  if (p.tau().imag() < modular_threshold) return theta_derivs_small_imtau(u, p);
  return theta_derivs(u, p);
}

std::vector<cplx> theta_taylor(cplx center, const EllipticParams& p, int order) {
  if (order < 0) throw std::invalid_argument("theta_taylor: order must be >= 0");
  return detail::reduced_taylor(center, p, order);
}

double lattice_distance(cplx w, cplx tau) {
  const double m0 = std::round(w.imag() / tau.imag());
  double best = std::numeric_limits<double>::infinity();
  for (int dm = -1; dm <= 1; ++dm) {
    const cplx w1 = w - (m0 + dm) * tau;
    const double n0 = std::round(w1.real());
    for (int dn = -1; dn <= 1; ++dn) best = std::min(best, std::abs(w1 - (n0 + dn)));
  }
  return best;
}

}  // namespace ellr
