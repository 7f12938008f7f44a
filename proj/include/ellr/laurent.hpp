#pragma once

#include <limits>
#include <vector>

#include "ellr/theta.hpp"

namespace ellr {

// Truncated Laurent series sum_{d >= min_deg} c_d u^d with coefficients known for d <= max_deg.
// An exact series is a Laurent polynomial: every coefficient above max_deg is zero.
class LaurentSeries {
 public:
  LaurentSeries() : LaurentSeries(0, 0, {cplx{0.0}}, true) {}
  LaurentSeries(int min_deg, int max_deg, std::vector<cplx> coeffs, bool exact = false);

  static LaurentSeries monomial(int deg, cplx c = 1.0);
  static LaurentSeries zero(int min_deg, int max_deg, bool exact = false);

  int min_deg() const noexcept { return min_; }
  int max_deg() const noexcept { return max_; }
  bool exact() const noexcept { return exact_; }
  // Highest degree whose coefficient is certified; "infinite" for exact series.
  int certified_max() const noexcept { return exact_ ? std::numeric_limits<int>::max() : max_; }
  const std::vector<cplx>& coeffs() const noexcept { return c_; }

  // Zero below min_deg and above max_deg of an exact series; WindowInsufficient otherwise.
  cplx coeff(int d) const;
  cplx& at(int d);

  // Drops coefficients above d (the result is no longer exact unless it was and d >= max_deg).
  LaurentSeries truncated(int d) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator*=(cplx s);
  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(cplx s, LaurentSeries a) { return a *= s; }

 private:
  int min_, max_;
  std::vector<cplx> c_;
  bool exact_;
};

// Coefficient of u^{-1} in a*b. Throws WindowInsufficient if the product cannot certify it.
cplx residue_pair(const LaurentSeries& a, const LaurentSeries& b);

// Largest |coefficient difference| over the degrees certified in both.
double max_coeff_diff(const LaurentSeries& a, const LaurentSeries& b);

}  // namespace ellr
