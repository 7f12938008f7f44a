#include "ellr/laurent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ellr/errors.hpp"

namespace ellr {

LaurentSeries::LaurentSeries(int min_deg, int max_deg, std::vector<cplx> coeffs, bool exact)
    : min_(min_deg), max_(max_deg), c_(std::move(coeffs)), exact_(exact) {
  if (min_ > max_) throw std::invalid_argument("LaurentSeries: min_deg > max_deg");
  if (c_.size() != static_cast<std::size_t>(max_ - min_ + 1))
    throw std::invalid_argument("LaurentSeries: coefficient count does not match the degree window");
}

LaurentSeries LaurentSeries::monomial(int deg, cplx c) { return LaurentSeries(deg, deg, {c}, true); }

LaurentSeries LaurentSeries::zero(int min_deg, int max_deg, bool exact) {
  return LaurentSeries(min_deg, max_deg, std::vector<cplx>(max_deg - min_deg + 1, cplx{0.0}), exact);
}

cplx LaurentSeries::coeff(int d) const {
  if (d < min_) return 0.0;
  if (d > max_) {
    if (exact_) return 0.0;
    throw WindowInsufficient("coefficient of degree " + std::to_string(d) + " lies above the certified window " +
                             std::to_string(max_));
  }
  return c_[d - min_];
}

cplx& LaurentSeries::at(int d) {
  if (d < min_ || d > max_) throw std::out_of_range("LaurentSeries::at outside the stored window");
  return c_[d - min_];
}

LaurentSeries LaurentSeries::truncated(int d) const {
  if (d >= max_) return *this;
  if (d < min_) throw WindowInsufficient("truncation below the lowest degree");
  return LaurentSeries(min_, d, std::vector<cplx>(c_.begin(), c_.begin() + (d - min_ + 1)), false);
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentSeries& LaurentSeries::operator*=(cplx s) {
  for (auto& x : c_) x *= s;
  return *this;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = std::min(a.min_, b.min_);
  int hi;
  bool exact = a.exact_ && b.exact_;
  if (exact) {
    hi = std::max(a.max_, b.max_);
  } else {
    hi = std::min(a.certified_max(), b.certified_max());
  }
  hi = std::max(hi, lo);
  LaurentSeries r = LaurentSeries::zero(lo, hi, exact);
  for (int d = lo; d <= hi; ++d) {
    cplx s{0.0};
    if (d >= a.min_ && d <= a.max_) s += a.c_[d - a.min_];
    if (d >= b.min_ && d <= b.max_) s += b.c_[d - b.min_];
    r.c_[d - lo] = s;
  }
  return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = a.min_ + b.min_;
  int hi;
  const bool exact = a.exact_ && b.exact_;
  if (exact) {
    hi = a.max_ + b.max_;
  } else {
    // coefficient d needs a_i for i <= d - b.min and b_j for j <= d - a.min
    hi = std::numeric_limits<int>::max();
    if (!b.exact_) hi = std::min(hi, a.min_ + b.max_);
    if (!a.exact_) hi = std::min(hi, a.max_ + b.min_);
  }
  if (hi < lo) throw WindowInsufficient("product of the two truncated series certifies no coefficient");
  LaurentSeries r = LaurentSeries::zero(lo, hi, exact);
  for (int i = a.min_; i <= a.max_; ++i) {
    const cplx ai = a.c_[i - a.min_];
    if (ai == cplx{0.0}) continue;
    for (int j = b.min_; j <= b.max_ && i + j <= hi; ++j) r.c_[i + j - lo] += ai * b.c_[j - b.min_];
  }
  return r;
}

cplx residue_pair(const LaurentSeries& a, const LaurentSeries& b) {
  const LaurentSeries p = a * b;
  if (!p.exact() && p.max_deg() < -1)
    throw WindowInsufficient("product window [" + std::to_string(p.min_deg()) + ", " + std::to_string(p.max_deg()) +
                             "] cannot certify the residue");
  return p.coeff(-1);
}

double max_coeff_diff(const LaurentSeries& a, const LaurentSeries& b) {
  const int lo = std::min(a.min_deg(), b.min_deg());
  int hi = std::min(a.certified_max(), b.certified_max());
  if (hi == std::numeric_limits<int>::max()) hi = std::max(a.max_deg(), b.max_deg());
  double m = 0.0;
  for (int d = lo; d <= hi; ++d) m = std::max(m, std::abs(a.coeff(d) - b.coeff(d)));
  return m;
}

}  // namespace ellr
