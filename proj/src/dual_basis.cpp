#include "ellr/dual_basis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ellr/errors.hpp"
#include "ellr/kernels.hpp"
#include "ellr/quadrature.hpp"

namespace ellr {

namespace {

// a / b as power series up to degree n, b[0] != 0.
std::vector<cplx> series_divide(const std::vector<cplx>& a, const std::vector<cplx>& b, int n) {
  std::vector<cplx> q(n + 1, cplx{0.0});
  for (int k = 0; k <= n; ++k) {
    cplx s = k < static_cast<int>(a.size()) ? a[k] : cplx{0.0};
    for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) s -= b[j] * q[k - j];
    q[k] = s / b[0];
  }
  return q;
}

// (1/n!) d^n/du^n of a series with window [-1, K]; result window [-n-1, K-n].
LaurentSeries scaled_derivative(const LaurentSeries& g, int n) {
  const int K = g.max_deg();
  LaurentSeries r = LaurentSeries::zero(-n - 1, K - n, false);
  for (int k = -1; k <= K; ++k) {
    // (1/n!) (u^k)^(n) = binom(k, n) u^{k-n}, and (-1)^n u^{-n-1} for k = -1
    double c;
    if (k == -1) {
      c = (n % 2) ? -1.0 : 1.0;
    } else {
      if (k < n) continue;
      c = 1.0;
      for (int j = 0; j < n; ++j) c = std::round(c * (k - j) / (j + 1));
    }
    r.at(k - n) += c * g.coeff(k);
  }
  return r;
}

void require_lambda(cplx lambda, const EllipticParams& p) {
  if (lambda != cplx{0.0} && lattice_distance(lambda, p.tau()) <= default_pole_margin)
    throw NearPole(NearPole::Where::lambda, "lambda lies within the pole margin of the lattice but is not 0");
}

}  // namespace

LaurentSeries kernel_laurent_at_zero(cplx lambda, const EllipticParams& p, int order) {
  require_lambda(lambda, p);
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  const int n = order + 1;
  // theta(u) = u * b(u)
  const std::vector<cplx> t0 = theta_taylor(0.0, p, n + 1);
  std::vector<cplx> b(t0.begin() + 1, t0.end());
  std::vector<cplx> a(n + 1);
  if (lambda == cplx{0.0}) {
    // theta'(u) = sum (k+1) t_{k+1} u^k
    for (int k = 0; k <= n; ++k) a[k] = static_cast<double>(k + 1) * t0[k + 1];
  } else {
    const std::vector<cplx> tl = theta_taylor(lambda, p, n);
    const cplx th = tl[0];
    for (int k = 0; k <= n; ++k) a[k] = tl[k] / th;
  }
  return LaurentSeries(-1, order, series_divide(a, b, n), false);
}

std::vector<cplx> kernel_taylor(cplx center, cplx lambda, const EllipticParams& p, int order) {
  require_lambda(lambda, p);
  if (lattice_distance(center, p.tau()) <= default_pole_margin)
    throw NearPole(NearPole::Where::argument, "Taylor center lies on the lattice");
  const std::vector<cplx> den = theta_taylor(center, p, order);
  std::vector<cplx> num;
  if (lambda == cplx{0.0}) {
    const std::vector<cplx> t = theta_taylor(center, p, order + 1);
    num.resize(order + 1);
    for (int k = 0; k <= order; ++k) num[k] = static_cast<double>(k + 1) * t[k + 1];
  } else {
    num = theta_taylor(center + lambda, p, order);
    const cplx th = theta_taylor(lambda, p, 0)[0];
    for (auto& x : num) x /= th;
  }
  return series_divide(num, den, order);
}

DualBasisTable::DualBasisTable(cplx lambda, const EllipticParams& p, int N) : lambda_(lambda), tau_(p.tau()), N_(N) {
  if (N < 0) throw std::invalid_argument("table order must be >= 0");
  const int K = 2 * N + 2;
  const LaurentSeries gp = kernel_laurent_at_zero(lambda, p, K);
  // theta(u-l)/(theta(u) theta(-l)) = -g_l(-u) by oddness of theta
  LaurentSeries gm = gp;
  if (lambda != cplx{0.0})
    for (int k = -1; k <= K; ++k) gm.at(k) = ((k % 2) ? 1.0 : -1.0) * gp.coeff(k);
  upper_.resize(2 * N + 2);
  lower_.resize(2 * N + 2);
  for (int n = 0; n <= N; ++n) {
    lower_[n + N + 1] = LaurentSeries::monomial(n, (n % 2) ? -1.0 : 1.0);
    upper_[-n - 1 + N + 1] = LaurentSeries::monomial(n);
    upper_[n + N + 1] = scaled_derivative(gp, n);
    LaurentSeries l = scaled_derivative(gm, n);
    if (n % 2) l = -l;
    lower_[-n - 1 + N + 1] = l;
  }
}

const LaurentSeries& DualBasisTable::upper(int n) const {
  if (n < -N_ - 1 || n > N_) throw std::out_of_range("dual basis index outside the table");
  return upper_[n + N_ + 1];
}

const LaurentSeries& DualBasisTable::lower(int n) const {
  if (n < -N_ - 1 || n > N_) throw std::out_of_range("dual basis index outside the table");
  return lower_[n + N_ + 1];
}

DualBasisTable expand_dual_basis(cplx lambda, const EllipticParams& p, int N) { return DualBasisTable(lambda, p, N); }

double duality_defect(const DualBasisTable& t) {
  const int N = t.order();
  double worst = 0.0;
  for (int n = -N - 1; n <= N; ++n)
    for (int m = -N - 1; m <= N; ++m) {
      const cplx v = residue_pair(t.upper(n), t.lower(m));
      worst = std::max(worst, std::abs(v - (n == m ? 1.0 : 0.0)));
    }
  return worst;
}

double green_series_check(cplx lambda, const EllipticParams& p, int N, cplx u) {
  const double R = std::min(1.0, std::abs(p.tau()));
  if (!(std::abs(u) > 0.0 && std::abs(u) < R)) throw DomainError("need 0 < |u| < min(1, |tau|)");
  if (N < 4) throw std::invalid_argument("N must be >= 4");
  const std::vector<cplx> taylor = kernel_taylor(u, lambda, p, N);
  const double r = 0.5 * std::abs(u);
  const int M = std::max(256, 8 * N);
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    const ComplexFn f = [&](cplx z) {
      const cplx g = lambda == cplx{0.0} ? g0(u - z, p) : g_lambda(u - z, lambda, p);
      return g * std::pow(z, -(n + 1));
    };
    const cplx c = circle_pairing(f, r, M);
    const cplx expect = ((n % 2) ? -1.0 : 1.0) * taylor[n];
    // Cauchy coefficients scale like r^{-n}; compare relative to that size
    worst = std::max(worst, std::abs(c - expect) / std::max(1.0, std::abs(c)));
  }
  return worst;
}

LaurentSeries project(const LaurentSeries& s, const DualBasisTable& t, Projection which) {
  const bool zero_variant = which == Projection::plus_0 || which == Projection::minus_0;
  if (zero_variant != t.is_zero_variant())
    throw std::invalid_argument(zero_variant ? "P+/P- need a table built at lambda = 0"
                                             : "P_lambda projections need a table built at lambda != 0");
  const int N = t.order();
  if (s.min_deg() < -N - 1) throw WindowInsufficient("series has a pole of higher order than the table covers");
  const bool plus = which == Projection::plus_lambda || which == Projection::plus_0;
  if (plus) {
    const int top = std::min(N, s.certified_max());
    LaurentSeries r = LaurentSeries::zero(0, std::max(top, 0), false);
    for (int n = 0; n <= top; ++n) r.at(n) = residue_pair(t.upper(n), s) * t.lower(n).coeff(n);
    return r;
  }
  // s = sum_n <epsilon^n, s> epsilon_n; the n < 0 coefficients come from the polar part of s
  LaurentSeries r = LaurentSeries::zero(-1, -1, true);
  for (int m = 0; m <= N; ++m) {
    const cplx c = residue_pair(t.upper(-m - 1), s);
    if (c == cplx{0.0}) continue;
    r = r + c * t.lower(-m - 1);
  }
  return r;
}

double delta_check(const DualBasisTable& t) {
  const int N = t.order();
  double worst = 0.0;
  for (int m = -N - 1; m <= N; ++m) {
    const LaurentSeries um = LaurentSeries::monomial(m);
    LaurentSeries sum = LaurentSeries::zero(-N - 1, N, true);
    for (int k = -N - 1; k <= N; ++k) {
      const cplx c = residue_pair(t.upper(k), um);
      if (c != cplx{0.0}) sum = sum + c * t.lower(k);
    }
    for (int d = -N - 1; d <= N; ++d) worst = std::max(worst, std::abs(sum.coeff(d) - (d == m ? 1.0 : 0.0)));
  }
  return worst;
}

}  // namespace ellr
