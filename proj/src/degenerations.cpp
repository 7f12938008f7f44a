#include "ellr/degenerations.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ellr/errors.hpp"
#include "ellr/kernels.hpp"

namespace ellr {

namespace {

constexpr double half_plane_margin = 1e-9;

void require_pole_free(cplx w, double scale = 1.0) {
  if (std::abs(w) <= default_pole_margin * scale) throw NearPole(NearPole::Where::argument, "w lies on a pole");
}

void require_lower(cplx w) {
  if (!(w.imag() < -half_plane_margin)) throw DomainError("kernel needs Im w < 0");
}

void require_upper(cplx w) {
  if (!(w.imag() > half_plane_margin)) throw DomainError("kernel needs Im w > 0");
}

double strip_width(cplx eta) {
  if (!(eta.real() > 0.0)) throw DomainError("eta must satisfy Re eta > 0");
  return (1.0 / eta).real();
}

void require_eta_strip(cplx w, cplx eta, bool lower) {
  const double W = strip_width(eta);
  const double m = 1e-3 * W;
  const double y = w.imag();
  const bool ok = lower ? (y < -m && y > -W + m) : (y > m && y < W - m);
  if (!ok)
    throw DomainError(lower ? "kernel needs -Re(1/eta) < Im w < 0 with margin"
                            : "kernel needs 0 < Im w < Re(1/eta) with margin");
}

cplx cot_pi(cplx w) {
  // stable for large |Im w|
  const cplx z = pi * w;
  if (z.imag() >= 0.0) {
    const cplx x = std::exp(2.0 * I * z);
    return -I - 2.0 * I * x / (1.0 - x);
  }
  const cplx y = std::exp(-2.0 * I * z);
  return I + 2.0 * I * y / (1.0 - y);
}

cplx require_cot_pole_free(cplx w) {
  const double d = std::abs(w - std::round(w.real()));
  if (d <= default_pole_margin) throw NearPole(NearPole::Where::argument, "w lies on a pole of ctg");
  return pi * cot_pi(w);
}

cplx cth_kernel(cplx w, cplx eta) {
  // pi eta cth(pi eta w) = pi eta (1 + e^{-2x})/(1 - e^{-2x}), x = pi eta w
  cplx x = pi * eta * w;
  const double s = x.real() >= 0.0 ? 1.0 : -1.0;
  x *= s;
  const cplx e = std::exp(-2.0 * x);
  return s * pi * eta * (1.0 + e) / (1.0 - e);
}

cplx psi_mu_kernel(cplx w, cplx mu, cplx eta) {
  const cplx a = 2.0 * pi * eta * w;
  if (a.real() >= 0.0) return 2.0 * pi * eta * std::exp(-mu * a) / (1.0 - std::exp(-a));
  // multiply through by e^{a}
  return -2.0 * pi * eta * std::exp((1.0 - mu) * a) / (1.0 - std::exp(a));
}

}  // namespace

std::string_view kernel_name(DegenerateKernel k) {
  switch (k) {
    case DegenerateKernel::phi_plus: return "PHI_PLUS";
    case DegenerateKernel::phi_minus: return "PHI_MINUS";
    case DegenerateKernel::psi_trig: return "PSI_TRIG";
    case DegenerateKernel::psi_tilde_plus: return "PSI_TILDE_PLUS";
    case DegenerateKernel::psi_tilde_minus: return "PSI_TILDE_MINUS";
    case DegenerateKernel::psi_cth: return "PSI_CTH";
    case DegenerateKernel::psi_mu_plus: return "PSI_MU_PLUS";
    case DegenerateKernel::psi_mu_minus: return "PSI_MU_MINUS";
  }
  return "?";
}

bool mu_in_zone(cplx mu, cplx eta, double margin) {
  if (!(eta.real() > 0.0)) return false;
  const double a = eta.imag() * mu.imag() / eta.real();
  return mu.real() > a + margin && mu.real() < a + 1.0 - margin;
}

void require_zone(cplx mu, cplx eta, double margin) {
  if (!(eta.real() > 0.0)) throw DomainError("eta must satisfy Re eta > 0");
  if (!mu_in_zone(mu, eta, margin))
    throw DomainError("mu outside the zone Im(eta)Im(mu)/Re(eta) < Re(mu) < Im(eta)Im(mu)/Re(eta) + 1 (margin " +
                      std::to_string(margin) + ")");
}

cplx degenerate_kernel(DegenerateKernel k, cplx w, const TrigParams& tp) {
  switch (k) {
    case DegenerateKernel::phi_plus: require_lower(w); require_pole_free(w); return 1.0 / w;
    case DegenerateKernel::phi_minus: require_upper(w); require_pole_free(w); return 1.0 / w;
    case DegenerateKernel::psi_trig: return require_cot_pole_free(w);
    case DegenerateKernel::psi_tilde_plus: require_lower(w); return require_cot_pole_free(w);
    case DegenerateKernel::psi_tilde_minus: require_upper(w); return require_cot_pole_free(w);
    case DegenerateKernel::psi_cth: require_eta_strip(w, tp.eta, true); return cth_kernel(w, tp.eta);
    case DegenerateKernel::psi_mu_plus:
      require_zone(tp.mu, tp.eta);
      require_eta_strip(w, tp.eta, true);
      return psi_mu_kernel(w, tp.mu, tp.eta);
    case DegenerateKernel::psi_mu_minus:
      require_zone(tp.mu, tp.eta);
      require_eta_strip(w, tp.eta, false);
      return psi_mu_kernel(w, tp.mu, tp.eta);
  }
  throw std::invalid_argument("unknown kernel");
}

cplx psi_tilde_series(cplx w, bool plus, int K) {
  const cplx x = std::exp((plus ? -2.0 : 2.0) * pi * I * w);
  cplx s{0.0}, t{1.0};
  for (int n = 1; n <= K; ++n) {
    t *= x;
    s += t;
  }
  const cplx v = pi * I + 2.0 * pi * I * s;
  return plus ? v : -v;
}

int psi_tilde_terms(cplx w, double tol) {
  const double y = std::abs(w.imag());
  if (y == 0.0) return 4096;
  return static_cast<int>(std::min(4096.0, std::ceil(std::log(1.0 / tol) / (2.0 * pi * y)) + 1));
}

double limit_error(const DegenerationCase& c, LimitTarget target, const std::vector<cplx>& samples) {
  if (!(c.scale > 0.0)) throw DomainError("scale must be positive");
  double worst = 0.0;
  switch (c.id) {
    case DegenerationCaseId::a_rational: {
      const EllipticParams p(c.tau);
      const double om = c.scale;
      for (cplx w : samples) {
        const double e = target == LimitTarget::g0
                             ? std::abs(g0(w / om, p) / om - 1.0 / w)
                             : std::abs(g_lambda(w / om, c.lambda / om, p) / om - (1.0 / c.lambda + 1.0 / w));
        worst = std::max(worst, e);
      }
      break;
    }
    case DegenerationCaseId::b_trig: {
      const EllipticParams p(cplx{0.0, c.scale});
      for (cplx w : samples) {
        const double e = target == LimitTarget::g0
                             ? std::abs(g0(w, p) - pi * cot_pi(w))
                             : std::abs(g_lambda(w, c.lambda, p) - (pi * cot_pi(c.lambda) + pi * cot_pi(w)));
        worst = std::max(worst, e);
      }
      break;
    }
    case DegenerationCaseId::c_trig_cyl: {
      const double om = c.scale;
      const cplx eta = c.trig.eta;
      strip_width(eta);
      const EllipticParams p(I / (eta * om));
      if (target == LimitTarget::glambda) require_zone(c.trig.mu, eta);
      for (cplx w : samples) {
        double e;
        if (target == LimitTarget::g0) {
          require_eta_strip(w, eta, true);
          e = std::abs(g0(w / om, p) / om - cth_kernel(w, eta));
        } else {
          require_eta_strip(w, eta, w.imag() < 0.0);
          e = std::abs(g_lambda(w / om, c.trig.mu, p) / om - psi_mu_kernel(w, c.trig.mu, eta));
        }
        worst = std::max(worst, e);
      }
      break;
    }
  }
  return worst;
}

LadderResult ladder(DegenerationCase c, LimitTarget target, const std::vector<double>& scales,
                    const std::vector<cplx>& samples) {
  if (scales.size() < 2) throw DomainError("a ladder needs at least two scales");
  for (std::size_t i = 1; i < scales.size(); ++i)
    if (!(scales[i] > scales[i - 1])) throw DomainError("ladder scales must be strictly increasing");
  LadderResult r;
  for (double s : scales) {
    c.scale = s;
    r.rows.push_back({s, limit_error(c, target, samples)});
  }
  r.monotone = true;
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    if (!(r.rows[i].max_error < r.rows[i - 1].max_error)) r.monotone = false;
  // least-squares slope of log(error) against log(scale) or scale
  const bool loglin = c.id == DegenerationCaseId::b_trig;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(r.rows.size());
  for (const auto& row : r.rows) {
    const double x = loglin ? row.scale : std::log(row.scale);
    const double y = std::log(row.max_error);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  r.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return r;
}

std::vector<cplx> default_limit_samples(DegenerationCaseId id, LimitTarget target, const TrigParams& tp) {
  switch (id) {
    case DegenerationCaseId::a_rational: return {{0.5, 0.0}, {0.3, -0.2}, {-0.4, 0.25}, {0.1, 0.45}};
    case DegenerationCaseId::b_trig: return {{0.3, -0.1}, {0.2, 0.15}, {-0.35, 0.05}, {0.45, -0.2}};
    case DegenerationCaseId::c_trig_cyl: {
      const double W = strip_width(tp.eta);
      std::vector<cplx> s{{0.2, -0.2 * W}, {-0.3, -0.5 * W}, {0.1, -0.75 * W}};
      if (target == LimitTarget::glambda) s.push_back({0.25, 0.4 * W});
      return s;
    }
  }
  return {};
}

std::string_view kind_name(DegenerateKind k) {
  switch (k) {
    case DegenerateKind::r_a_k0: return "R_A_K0";
    case DegenerateKind::r_b_k0: return "R_B_K0";
    case DegenerateKind::r_a_cyl: return "R_A_CYL";
    case DegenerateKind::r_b_cyl: return "R_B_CYL";
    case DegenerateKind::r_c_cyl: return "R_C_CYL";
  }
  return "?";
}

RMatrix4 build_degenerate_r(DegenerateKind kind, cplx u, cplx v, const TrigParams& tp) {
  const cplx w = u - v;
  auto pattern = [](cplx diag, cplx e23, cplx e32) {
    return RMatrix4{0.5 * diag, -0.5 * diag, -0.5 * diag, 0.5 * diag, e23, e32};
  };
  switch (kind) {
    case DegenerateKind::r_a_k0:
    case DegenerateKind::r_b_k0: {
      if (!(std::abs(u) > std::abs(v) * (1.0 + 1e-3) && std::abs(v) > 0.0))
        throw DomainError("annulus order |u| > |v| > 0 violated");
      if (kind == DegenerateKind::r_a_k0) {
        require_pole_free(w);
        const cplx phi = 1.0 / w;
        return pattern(phi, phi, phi);
      }
      if (!(std::abs(u) < 1.0)) throw DomainError("trigonometric annulus needs |u| < 1");
      const cplx psi = require_cot_pole_free(w);
      return pattern(psi, -pi * I + psi, pi * I + psi);
    }
    case DegenerateKind::r_a_cyl: {
      const cplx phi = degenerate_kernel(DegenerateKernel::phi_plus, w);
      return pattern(phi, phi, phi);
    }
    case DegenerateKind::r_b_cyl: {
      const cplx psi = degenerate_kernel(DegenerateKernel::psi_tilde_plus, w);
      return pattern(psi, -pi * I + psi, pi * I + psi);
    }
    case DegenerateKind::r_c_cyl: {
      const cplx psi = degenerate_kernel(DegenerateKernel::psi_cth, w, tp);
      const cplx e23 = -degenerate_kernel(DegenerateKernel::psi_mu_minus, -w, tp);
      const cplx e32 = degenerate_kernel(DegenerateKernel::psi_mu_plus, w, tp);
      return pattern(psi, e23, e32);
    }
  }
  throw std::invalid_argument("unknown kind");
}

}  // namespace ellr
