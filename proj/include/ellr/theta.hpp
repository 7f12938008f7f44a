#pragma once

#include <complex>
#include <vector>

namespace ellr {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr cplx I{0.0, 1.0};

// Below this Im(tau) the kernels route theta through the modular transformation.
inline constexpr double modular_threshold = 0.05;

class EllipticParams {
 public:
  explicit EllipticParams(cplx tau, double series_tol = 1e-15, int max_terms = 64);

  cplx tau() const noexcept { return tau_; }
  cplx q() const noexcept { return q_; }
  double series_tol() const noexcept { return series_tol_; }
  int max_terms() const noexcept { return max_terms_; }

  EllipticParams with_tau(cplx tau) const { return EllipticParams(tau, series_tol_, max_terms_); }

 private:
  cplx tau_;
  cplx q_;
  double series_tol_;
  int max_terms_;
};

struct ThetaDerivs {
  cplx d0, d1, d2, d3;
};

// Direct nome series. Throws TruncationOverflow when max_terms is not enough.
cplx theta(cplx u, const EllipticParams& p);
ThetaDerivs theta_derivs(cplx u, const EllipticParams& p);

// Modular-transformation path, for 0 < Im tau < modular_threshold.
cplx theta_small_imtau(cplx u, const EllipticParams& p);
ThetaDerivs theta_derivs_small_imtau(cplx u, const EllipticParams& p);

// Picks the direct series or the modular path from Im tau.
ThetaDerivs theta_derivs_auto(cplx u, const EllipticParams& p);

// theta^(k)(center)/k! for k = 0..order, by term-wise differentiation.
std::vector<cplx> theta_taylor(cplx center, const EllipticParams& p, int order);

// Distance from w to the lattice Z + tau Z.
double lattice_distance(cplx w, cplx tau);

}  // namespace ellr
