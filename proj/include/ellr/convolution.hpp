#pragma once

#include <array>
#include <string_view>

#include "ellr/theta.hpp"

namespace ellr {

// Circle-pairing family (k0_*) and segment-pairing family (cyl_*).
enum class ConvolutionId {
  k0_gp_gp,   // <G+(u,z) G+(z,v)> = G+(u,v)
  k0_gp_gm,   // <G+(u,z) G-(z,v)> = 0
  k0_gm_gm,   // <G-(u,z) G-(z,v)> = -G-(u,v)
  k0_gm_gp,   // <G-(u,z) G+(z,v)> = 0
  k0_g_g,     // <G(u,z) G(z,v)> = G(u,v)
  k0_g_gt,    // <G(u,z) G(v,z)> = 0
  cyl_gp_gp,  // = G+(u-v) - (1/2 pi i) d_l G+(u-v)
  cyl_gp_gm,  // = -(1/2 pi i) d_l G+(u-v)
  cyl_gm_gp,  // = -(1/2 pi i) d_l G+(u-v)
  cyl_gm_gm,  // = -G-(u-v) - (1/2 pi i) d_l G+(u-v)
  cyl_g_g,    // <G(u-z) G(z-v)> = G(u-v) - gamma(u-v)/(4 pi i)
  cyl_g_gt,   // <G(u-z) G(v-z)> = gamma(u-v)/(4 pi i)
  cyl_gt_gt,  // <G(z-u) G(z-v)> = gamma(u-v)/(4 pi i)
};

inline constexpr std::array<ConvolutionId, 6> k0_identities{
    ConvolutionId::k0_gp_gp, ConvolutionId::k0_gp_gm, ConvolutionId::k0_gm_gm,
    ConvolutionId::k0_gm_gp, ConvolutionId::k0_g_g,   ConvolutionId::k0_g_gt};
inline constexpr std::array<ConvolutionId, 7> cyl_identities{
    ConvolutionId::cyl_gp_gp, ConvolutionId::cyl_gp_gm, ConvolutionId::cyl_gm_gp, ConvolutionId::cyl_gm_gm,
    ConvolutionId::cyl_g_g,   ConvolutionId::cyl_g_gt,  ConvolutionId::cyl_gt_gt};

std::string_view convolution_name(ConvolutionId id);
bool is_cylinder(ConvolutionId id);

// Contour the identity would integrate over: circle radius (k0) or segment height (cyl).
// Throws DomainError when (u, v) admit no contour with the required ordering.
double convolution_contour(ConvolutionId id, cplx u, cplx v, const EllipticParams& p);

// Geometric error bound of the M-node rule on that contour: (a/b)^{M/2} on the circle between the inner
// pole radius a and the outer pole radius b, e^{-2 pi M d} on a segment at distance d from the nearest pole row.
double convolution_quadrature_bound(ConvolutionId id, cplx u, cplx v, const EllipticParams& p, int M);

// Quadrature of the left side with M nodes minus the closed-form right side.
// Throws QuadratureError when the M and 2M quadratures disagree beyond 1e-9.
cplx convolution_residual(ConvolutionId id, cplx u, cplx v, cplx lambda, const EllipticParams& p, int M = 128);

}  // namespace ellr
