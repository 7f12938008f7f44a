#include "ellr/rmatrix.hpp"

#include <algorithm>

#include "ellr/errors.hpp"

namespace ellr {

RMatrix4 build_r(cplx u, cplx v, cplx lambda, const EllipticParams& p) {
  const cplx w = u - v;
  const cplx h = 0.5 * g0(w, p);
  return {h, -h, -h, h, g_lambda(w, -lambda, p), g_lambda(w, lambda, p)};
}

RMatrix4 build_dlambda_r(cplx u, cplx v, cplx lambda, const EllipticParams& p) {
  const cplx w = u - v;
  return {0.0, 0.0, 0.0, 0.0, -dlambda_g_lambda(w, -lambda, p), dlambda_g_lambda(w, lambda, p)};
}

double cdybe_residual(cplx u1, cplx u2, cplx u3, cplx lambda, const EllipticParams& p, unsigned terms) {
  const Mat8 r12 = embed(build_r(u1, u2, lambda, p).matrix(), 0, 1);
  const Mat8 r13 = embed(build_r(u1, u3, lambda, p).matrix(), 0, 2);
  const Mat8 r23 = embed(build_r(u2, u3, lambda, p).matrix(), 1, 2);
  const Mat8 bracket = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
  const Mat2& H = sl2().H;
  Mat8 rhs = Mat8::Zero();
  if (terms & dyn_h1) rhs += embed1(H, 0) * embed(build_dlambda_r(u2, u3, lambda, p).matrix(), 1, 2);
  if (terms & dyn_h2) rhs -= embed1(H, 1) * embed(build_dlambda_r(u1, u3, lambda, p).matrix(), 0, 2);
  if (terms & dyn_h3) rhs += embed1(H, 2) * embed(build_dlambda_r(u1, u2, lambda, p).matrix(), 0, 1);
  return (bracket - rhs).norm() / std::max(1.0, bracket.norm());
}

Mat4 l_slice(cplx u, cplx w, cplx lambda, Sign sign, const EllipticParams& p) {
  if (sign == Sign::plus) return build_r(u, w, lambda, p).matrix();
  return -swap12(build_r(w, u, lambda, p).matrix());
}

namespace {

Mat4 dl_slice(cplx u, cplx w, cplx lambda, Sign sign, const EllipticParams& p) {
  if (sign == Sign::plus) return build_dlambda_r(u, w, lambda, p).matrix();
  return -swap12(build_dlambda_r(w, u, lambda, p).matrix());
}

void check_slice(cplx u, cplx w, Sign s, DomainPolicy policy, const EllipticParams& p) {
  if (policy == DomainPolicy::k0)
    validate_annulus({u, w, s == Sign::plus ? AnnulusOrder::outer : AnnulusOrder::inner}, p);
  else if (policy == DomainPolicy::cyl)
    validate_strip({u - w, s == Sign::plus ? Strip::lower : Strip::upper}, p);
}

}  // namespace

double rll_residual(cplx u, cplx v, cplx w, cplx lambda, std::pair<Sign, Sign> signs, const EllipticParams& p,
                    DomainPolicy policy) {
  if (policy != DomainPolicy::none) {
    check_slice(u, w, signs.first, policy, p);
    check_slice(v, w, signs.second, policy, p);
    const bool reversed = signs.first == Sign::minus && signs.second == Sign::plus;
    if (policy == DomainPolicy::k0)
      validate_annulus({u, v, reversed ? AnnulusOrder::inner : AnnulusOrder::outer}, p);
    else
      validate_strip({u - v, reversed ? Strip::upper : Strip::lower}, p);
  }
  const Mat8 L1 = embed(l_slice(u, w, lambda, signs.first, p), 0, 2);
  const Mat8 L2 = embed(l_slice(v, w, lambda, signs.second, p), 1, 2);
  const Mat8 dL1 = embed(dl_slice(u, w, lambda, signs.first, p), 0, 2);
  const Mat8 dL2 = embed(dl_slice(v, w, lambda, signs.second, p), 1, 2);
  const Mat8 r12 = embed(build_r(u, v, lambda, p).matrix(), 0, 1);
  const Mat8 dr12 = embed(build_dlambda_r(u, v, lambda, p).matrix(), 0, 1);
  const Mat2& H = sl2().H;
  const Mat8 lhs = commutator(L1, L2);
  const Mat8 rhs = commutator(Mat8(L1 + L2), r12) + embed1(H, 0) * dL2 - embed1(H, 1) * dL1 + embed1(H, 2) * dr12;
  return (lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

double cybe_residual(DegenerateKind kind, cplx u1, cplx u2, cplx u3, const TrigParams& tp) {
  const bool annulus = kind == DegenerateKind::r_a_k0 || kind == DegenerateKind::r_b_k0;
  if (annulus) {
    if (!(std::abs(u1) > std::abs(u2) && std::abs(u2) > std::abs(u3)))
      throw DomainError("annulus kinds need |u1| > |u2| > |u3|");
  } else if (!(u1.imag() < u2.imag() && u2.imag() < u3.imag())) {
    throw DomainError("cylinder kinds need Im u1 < Im u2 < Im u3");
  }
  const Mat8 x12 = embed(build_degenerate_r(kind, u1, u2, tp).matrix(), 0, 1);
  const Mat8 x13 = embed(build_degenerate_r(kind, u1, u3, tp).matrix(), 0, 2);
  const Mat8 x23 = embed(build_degenerate_r(kind, u2, u3, tp).matrix(), 1, 2);
  const Mat8 a = commutator(x12, x13), b = commutator(x12, x23), c = commutator(x13, x23);
  return (a + b + c).norm() / std::max({1.0, a.norm(), b.norm(), c.norm()});
}

}  // namespace ellr
