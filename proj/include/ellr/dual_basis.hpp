#pragma once

#include <vector>

#include "ellr/laurent.hpp"
#include "ellr/theta.hpp"

namespace ellr {

// Laurent expansion at u = 0 of theta(u+l)/(theta(u) theta(l)), or of theta'/theta for l == 0,
// window [-1, order].
LaurentSeries kernel_laurent_at_zero(cplx lambda, const EllipticParams& p, int order);

// Taylor coefficients g^(k)(center)/k!, k = 0..order, of the same kernel around a regular point.
std::vector<cplx> kernel_taylor(cplx center, cplx lambda, const EllipticParams& p, int order);

// The pair of dual bases indexed by n in [-N-1, N].
class DualBasisTable {
 public:
  DualBasisTable(cplx lambda, const EllipticParams& p, int N);

  cplx lambda() const noexcept { return lambda_; }
  cplx tau() const noexcept { return tau_; }
  int order() const noexcept { return N_; }
  bool is_zero_variant() const noexcept { return lambda_ == cplx{0.0}; }

  const LaurentSeries& upper(int n) const;  // epsilon^{n}
  const LaurentSeries& lower(int n) const;  // epsilon_{n}

 private:
  cplx lambda_, tau_;
  int N_;
  std::vector<LaurentSeries> upper_, lower_;
};

// Builds the table. lambda must be 0 exactly or off the lattice by the pole margin.
DualBasisTable expand_dual_basis(cplx lambda, const EllipticParams& p, int N);

// Largest |<epsilon^n, epsilon_m> - delta_nm| over -N-1 <= n, m <= N.
double duality_defect(const DualBasisTable& t);

// Max over n = 0..N of |c_n - (-1)^n g^(n)(u)/n!| / max(1, |c_n|), with c_n the z-Taylor
// coefficients of g(u - z) extracted by Cauchy integrals on |z| = |u|/2.
double green_series_check(cplx lambda, const EllipticParams& p, int N, cplx u);

enum class Projection { plus_lambda, minus_lambda, plus_0, minus_0 };

// Component in span{epsilon_n}_{n >= 0} (plus) or span{epsilon_n}_{n < 0} (minus), with coefficients
// from residue pairings against the dual basis. The *_0 variants need a table built at lambda = 0.
LaurentSeries project(const LaurentSeries& s, const DualBasisTable& t, Projection which);

// Max deviation of sum_k <epsilon^k, u^m> epsilon_k(z) from z^m over -N-1 <= m <= N, in degrees <= N.
double delta_check(const DualBasisTable& t);

}  // namespace ellr
