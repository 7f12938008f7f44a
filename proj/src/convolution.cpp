#include "ellr/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ellr/errors.hpp"
#include "ellr/kernels.hpp"
#include "ellr/quadrature.hpp"

namespace ellr {

namespace {

// Poles of the k0 integrand as functions of z, split into those that must sit inside the circle.
struct PoleSets {
  std::vector<cplx> inside, outside;
};

PoleSets k0_poles(ConvolutionId id, cplx u, cplx v, cplx tau) {
  PoleSets s;
  // first factor: kernel of (u - z); second factor: (z - v) or (v - z)
  bool u_in = false, v_in = false;
  switch (id) {
    case ConvolutionId::k0_gp_gp: v_in = true; break;
    case ConvolutionId::k0_gm_gm: u_in = true; break;
    case ConvolutionId::k0_gm_gp: u_in = v_in = true; break;
    case ConvolutionId::k0_g_g: v_in = true; break;
    default: break;
  }
  const bool v_reflected = id == ConvolutionId::k0_g_gt;
  for (int m = -3; m <= 3; ++m)
    for (int n = -3; n <= 3; ++n) {
      const cplx g = static_cast<double>(m) + static_cast<double>(n) * tau;
      const bool origin = m == 0 && n == 0;
      ((origin && u_in) ? s.inside : s.outside).push_back(u - g);
      ((origin && v_in) ? s.inside : s.outside).push_back(v_reflected ? v - g : v + g);
    }
  return s;
}

void check_k0_order(ConvolutionId id, cplx u, cplx v, const EllipticParams& p) {
  switch (id) {
    case ConvolutionId::k0_gp_gp:
    case ConvolutionId::k0_g_g: validate_annulus({u, v, AnnulusOrder::outer}, p); break;
    case ConvolutionId::k0_gm_gm: validate_annulus({u, v, AnnulusOrder::inner}, p); break;
    default: {
      const double R = std::min(1.0, std::abs(p.tau()));
      if (!(std::abs(u) < R && std::abs(v) < R && std::abs(u) > 0 && std::abs(v) > 0))
        throw DomainError("annulus points must satisfy 0 < |u|, |v| < min(1, |tau|)");
    }
  }
}

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  void meet(double a, double b) {
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
};

Interval cyl_heights(ConvolutionId id, cplx u, cplx v, double T) {
  const double yu = u.imag(), yv = v.imag();
  Interval h;
  switch (id) {
    case ConvolutionId::cyl_gp_gp: h.meet(yu, yu + T); h.meet(yv - T, yv); break;
    case ConvolutionId::cyl_gp_gm: h.meet(yu, yu + T); h.meet(yv, yv + T); break;
    case ConvolutionId::cyl_gm_gp: h.meet(yu - T, yu); h.meet(yv - T, yv); break;
    case ConvolutionId::cyl_gm_gm: h.meet(yu - T, yu); h.meet(yv, yv + T); break;
    case ConvolutionId::cyl_g_g: h.meet(yu, yu + T); h.meet(yv - T, yv); break;
    case ConvolutionId::cyl_g_gt: h.meet(yu, yu + T); h.meet(yv, yv + T); break;
    case ConvolutionId::cyl_gt_gt: h.meet(yu - T, yu); h.meet(yv - T, yv); break;
    default: break;
  }
  return h;
}

cplx gamma_of_difference(cplx w, const EllipticParams& p) {
  return gamma_fourier_band(w, p, gamma_band_terms(w, p));
}

}  // namespace

std::string_view convolution_name(ConvolutionId id) {
  switch (id) {
    case ConvolutionId::k0_gp_gp: return "k0 <G+(u,z)G+(z,v)> = G+(u,v)";
    case ConvolutionId::k0_gp_gm: return "k0 <G+(u,z)G-(z,v)> = 0";
    case ConvolutionId::k0_gm_gm: return "k0 <G-(u,z)G-(z,v)> = -G-(u,v)";
    case ConvolutionId::k0_gm_gp: return "k0 <G-(u,z)G+(z,v)> = 0";
    case ConvolutionId::k0_g_g: return "k0 <G(u,z)G(z,v)> = G(u,v)";
    case ConvolutionId::k0_g_gt: return "k0 <G(u,z)G(v,z)> = 0";
    case ConvolutionId::cyl_gp_gp: return "cyl <G+(u-z)G+(z-v)> = G+(u-v) - dG+(u-v)/(2 pi i)";
    case ConvolutionId::cyl_gp_gm: return "cyl <G+(u-z)G-(z-v)> = -dG+(u-v)/(2 pi i)";
    case ConvolutionId::cyl_gm_gp: return "cyl <G-(u-z)G+(z-v)> = -dG+(u-v)/(2 pi i)";
    case ConvolutionId::cyl_gm_gm: return "cyl <G-(u-z)G-(z-v)> = -G-(u-v) - dG+(u-v)/(2 pi i)";
    case ConvolutionId::cyl_g_g: return "cyl <G(u-z)G(z-v)> = G(u-v) - gamma(u-v)/(4 pi i)";
    case ConvolutionId::cyl_g_gt: return "cyl <G(u-z)G(v-z)> = gamma(u-v)/(4 pi i)";
    case ConvolutionId::cyl_gt_gt: return "cyl <G(z-u)G(z-v)> = gamma(u-v)/(4 pi i)";
  }
  return "?";
}

bool is_cylinder(ConvolutionId id) { return static_cast<int>(id) >= static_cast<int>(ConvolutionId::cyl_gp_gp); }

double convolution_contour(ConvolutionId id, cplx u, cplx v, const EllipticParams& p) {
  if (!is_cylinder(id)) {
    check_k0_order(id, u, v, p);
    const PoleSets s = k0_poles(id, u, v, p.tau());
    double a = 0.0, b = std::numeric_limits<double>::infinity();
    for (cplx z : s.inside) a = std::max(a, std::abs(z));
    for (cplx z : s.outside) b = std::min(b, std::abs(z));
    if (!(b > 1.2 * a) || !(b > 0.0)) throw DomainError("no circle separates the inner poles from the outer poles");
    return a > 0.0 ? std::sqrt(a * b) : 0.5 * b;
  }
  const double T = p.tau().imag();
  const Interval h = cyl_heights(id, u, v, T);
  if (!(h.hi - h.lo > 2e-3 * T)) throw DomainError("strip conditions leave no admissible segment height");
  const double d = u.imag() - v.imag();
  switch (id) {
    case ConvolutionId::cyl_gp_gp:
    case ConvolutionId::cyl_g_g:
      if (!(d < -1e-3 * T && d > -T + 1e-3 * T)) throw DomainError("u - v must lie on the LOWER strip");
      break;
    case ConvolutionId::cyl_gm_gm:
      if (!(d > 1e-3 * T && d < T - 1e-3 * T)) throw DomainError("u - v must lie on the UPPER strip");
      break;
    default: break;
  }
  return 0.5 * (h.lo + h.hi);
}

double convolution_quadrature_bound(ConvolutionId id, cplx u, cplx v, const EllipticParams& p, int M) {
  const double r = convolution_contour(id, u, v, p);
  if (!is_cylinder(id)) {
    const PoleSets s = k0_poles(id, u, v, p.tau());
    double a = 0.0, b = std::numeric_limits<double>::infinity();
    for (cplx z : s.inside) a = std::max(a, std::abs(z));
    for (cplx z : s.outside) b = std::min(b, std::abs(z));
    // with no inner pole the circle sits at b/2
    const double ratio = a > 0.0 ? a / b : 0.5;
    return std::pow(a > 0.0 ? std::sqrt(ratio) : ratio, M);
  }
  const Interval h = cyl_heights(id, u, v, p.tau().imag());
  return std::exp(-2.0 * pi * M * std::min(r - h.lo, h.hi - r));
}

cplx convolution_residual(ConvolutionId id, cplx u, cplx v, cplx lambda, const EllipticParams& p, int M) {
  const double contour = convolution_contour(id, u, v, p);
  ComplexFn f;
  cplx rhs{0.0};
  const cplx w = u - v;
  const cplx two_pi_i = 2.0 * pi * I;
  switch (id) {
    case ConvolutionId::k0_gp_gp:
    case ConvolutionId::k0_gp_gm:
    case ConvolutionId::k0_gm_gm:
    case ConvolutionId::k0_gm_gp:
    case ConvolutionId::cyl_gp_gp:
    case ConvolutionId::cyl_gp_gm:
    case ConvolutionId::cyl_gm_gp:
    case ConvolutionId::cyl_gm_gm:
      f = [&](cplx z) { return g_lambda(u - z, lambda, p) * g_lambda(z - v, lambda, p); };
      break;
    case ConvolutionId::k0_g_g:
    case ConvolutionId::cyl_g_g: f = [&](cplx z) { return g0(u - z, p) * g0(z - v, p); }; break;
    case ConvolutionId::k0_g_gt:
    case ConvolutionId::cyl_g_gt: f = [&](cplx z) { return g0(u - z, p) * g0(v - z, p); }; break;
    case ConvolutionId::cyl_gt_gt: f = [&](cplx z) { return g0(z - u, p) * g0(z - v, p); }; break;
  }
  switch (id) {
    case ConvolutionId::k0_gp_gp: rhs = g_lambda(w, lambda, p); break;
    case ConvolutionId::k0_gm_gm: rhs = -g_lambda(w, lambda, p); break;
    case ConvolutionId::k0_g_g: rhs = g0(w, p); break;
    case ConvolutionId::cyl_gp_gp: rhs = g_lambda(w, lambda, p) - dlambda_g_lambda(w, lambda, p) / two_pi_i; break;
    case ConvolutionId::cyl_gp_gm:
    case ConvolutionId::cyl_gm_gp: rhs = -dlambda_g_lambda(w, lambda, p) / two_pi_i; break;
    case ConvolutionId::cyl_gm_gm: rhs = -g_lambda(w, lambda, p) - dlambda_g_lambda(w, lambda, p) / two_pi_i; break;
    case ConvolutionId::cyl_g_g: rhs = g0(w, p) - gamma_of_difference(w, p) / (2.0 * two_pi_i); break;
    case ConvolutionId::cyl_g_gt:
    case ConvolutionId::cyl_gt_gt: rhs = gamma_of_difference(w, p) / (2.0 * two_pi_i); break;
    default: break;
  }
  const bool cyl = is_cylinder(id);
  const cplx lhs = cyl ? segment_pairing(f, contour, M) : circle_pairing(f, contour, M);
  const cplx lhs2 = cyl ? segment_pairing(f, contour, 2 * M) : circle_pairing(f, contour, 2 * M);
  if (!(std::abs(lhs - lhs2) <= 1e-9 * std::max(1.0, std::abs(lhs2))))
    throw QuadratureError("convolution quadrature not stable under node doubling");
  return lhs - rhs;
}

}  // namespace ellr
