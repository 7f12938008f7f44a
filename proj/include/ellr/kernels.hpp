#pragma once

#include <optional>

#include "ellr/theta.hpp"

namespace ellr {

inline constexpr double default_pole_margin = 1e-6;
inline constexpr double default_strip_margin = 1e-3;  // fraction of Im tau
inline constexpr int fourier_term_cap = 4096;

enum class Sign { plus, minus };

// LOWER: -Im tau < Im w < 0, UPPER: 0 < Im w < Im tau.
enum class Strip { lower, upper, none };

struct StripPoint {
  cplx w;
  Strip strip = Strip::none;
};

// OUTER: |u| > |z|, INNER: |u| < |z|.
enum class AnnulusOrder { outer, inner };

struct AnnulusPair {
  cplx u, z;
  AnnulusOrder order = AnnulusOrder::outer;
};

void validate_strip(const StripPoint& s, const EllipticParams& p, double margin_fraction = default_strip_margin);
void validate_annulus(const AnnulusPair& a, const EllipticParams& p);
// Distance of Im w to the nearest edge of its strip.
double strip_margin(const StripPoint& s, const EllipticParams& p);

cplx g0(cplx w, const EllipticParams& p, double pole_margin = default_pole_margin);
cplx g_lambda(cplx w, cplx lambda, const EllipticParams& p, double pole_margin = default_pole_margin);
cplx dlambda_g_lambda(cplx w, cplx lambda, const EllipticParams& p, double pole_margin = default_pole_margin);
// d/dw d/dlambda of g_lambda.
cplx dw_dlambda_g_lambda(cplx w, cplx lambda, const EllipticParams& p, double pole_margin = default_pole_margin);

// gamma from its Fourier expansion, symmetric over |n| <= N. Needs the LOWER strip.
cplx gamma_fourier(const StripPoint& w, const EllipticParams& p, int N);
cplx dw_gamma_fourier(const StripPoint& w, const EllipticParams& p, int N);
// Same partial sum anywhere in the band |Im w| < Im tau (gamma is even and analytic across Im w = 0).
cplx gamma_fourier_band(cplx w, const EllipticParams& p, int N);
// N for gamma_fourier_band from the distance of Im w to the band edge.
int gamma_band_terms(cplx w, const EllipticParams& p, double tol = 1e-16);
// theta''/theta - (theta'''(0) + 4 pi^2)/3; equals gamma inside |Im w| < Im tau.
cplx gamma_closed(cplx w, const EllipticParams& p);

// Symmetric partial Fourier sums of the cylinder Green kernels.
// With lambda: +/-2 pi i sum e^{-2 pi i n w}/(1 - e^{+/-2 pi i (n tau - lambda)}).
// Without lambda, sign + is pi i + 2 pi i sum_{n != 0} e^{-2 pi i n w}/(1 - e^{2 pi i n tau}) and
// sign - is its reflection -G(-w) on the upper strip.
cplx fourier_G_cyl(const StripPoint& w, std::optional<cplx> lambda, Sign sign, const EllipticParams& p, int N);
// Term-wise tau derivative of the same partial sum.
cplx dtau_fourier_G_cyl(const StripPoint& w, std::optional<cplx> lambda, Sign sign, const EllipticParams& p, int N);
// Fourier coefficient of e^{-2 pi i n w} in fourier_G_cyl.
cplx fourier_G_coefficient(int n, std::optional<cplx> lambda, Sign sign, const EllipticParams& p);

// Smallest N with e^{-2 pi N margin} < tol, capped at fourier_term_cap.
int fourier_terms(const StripPoint& w, std::optional<cplx> lambda, const EllipticParams& p, double tol = 1e-16);

// LHS - RHS of the degenerate Fay identity
// g_l(u-z) g_l(z) = g_l(u) g0(u-z) + g_l(u) g0(z) - d_l g_l(u).
cplx fay_residual(cplx u, cplx z, cplx lambda, const EllipticParams& p);

// (1/2 pi i) d_w d_l G_l^{+/-} - d_tau G_l^{+/-}, or without lambda (1/4 pi i) d_w gamma - d_tau G.
cplx heat_identity_residual(const StripPoint& w, std::optional<cplx> lambda, Sign sign, const EllipticParams& p);

// G_l^+(w - tau) - e^{2 pi i l} G_l^-(w) for w on the upper strip, both sides by Fourier sums.
cplx shift_residual(const StripPoint& w, cplx lambda, const EllipticParams& p);
// G(w - tau) - (2 pi i - G(-w)) for w on the upper strip.
cplx shift_residual_g0(const StripPoint& w, const EllipticParams& p);

}  // namespace ellr
