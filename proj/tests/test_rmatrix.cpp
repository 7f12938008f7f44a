#include <doctest.h>

#include <random>

#include "ellr/errors.hpp"
#include "ellr/rmatrix.hpp"

using namespace ellr;

namespace {

Mat8 kron3(const Mat2& a, const Mat2& b, const Mat2& c) {
  Mat8 out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      out(i, j) = a(i >> 2, j >> 2) * b((i >> 1) & 1, (j >> 1) & 1) * c(i & 1, j & 1);
  return out;
}

Mat4 kron2(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = a(i >> 1, j >> 1) * b(i & 1, j & 1);
  return out;
}

}  // namespace

TEST_CASE("tensor embeddings agree with explicit Kronecker products") {
  const SL2Basis& s = sl2();
  const Mat2 id = Mat2::Identity();
  const Mat4 EF = kron2(s.E, s.F);
  CHECK((embed(EF, 0, 1) - kron3(s.E, s.F, id)).norm() == 0.0);
  CHECK((embed(EF, 0, 2) - kron3(s.E, id, s.F)).norm() == 0.0);
  CHECK((embed(EF, 1, 2) - kron3(id, s.E, s.F)).norm() == 0.0);
  CHECK((embed(EF, 2, 0) - kron3(s.F, id, s.E)).norm() == 0.0);
  CHECK((embed1(s.H, 1) - kron3(id, s.H, id)).norm() == 0.0);
  CHECK((swap12(EF) - kron2(s.F, s.E)).norm() == 0.0);
}

TEST_CASE("r-matrix structure") {
  const EllipticParams p(cplx{0.1, 0.9});
  const cplx u{0.3, -0.1}, v{-0.05, 0.12}, l{0.2, 0.1};
  const RMatrix4 r = build_r(u, v, l, p);
  const Mat4 m = r.matrix();
  CHECK(hh_commutator(m).norm() == 0.0);
  CHECK(std::abs(r.e32 - g_lambda(u - v, l, p)) < 1e-14);
  CHECK(std::abs(r.e23 - g_lambda(u - v, -l, p)) < 1e-14);
  CHECK(std::abs(r.d11 - 0.5 * g0(u - v, p)) < 1e-14);
  // unitarity: P r(v, u) P = -r(u, v)
  CHECK((swap12(build_r(v, u, l, p).matrix()) + m).norm() < 1e-13);
  // round trip through the dense form, and rejection of entries outside the block
  CHECK(RMatrix4::from_matrix(m).max_diff(r) == 0.0);
  Mat4 bad = m;
  bad(0, 3) = 1.0;
  CHECK_THROWS_AS(RMatrix4::from_matrix(bad), std::invalid_argument);
}

TEST_CASE("lambda derivative of r by finite differences") {
  const EllipticParams p(cplx{0.0, 1.0});
  const cplx u{0.3, -0.1}, v{0.1, 0.2}, l{0.2, 0.1};
  const double h = 1e-5;
  const RMatrix4 fd = (1.0 / (2.0 * h)) * [&] {
    RMatrix4 a = build_r(u, v, l + h, p);
    a += -1.0 * build_r(u, v, l - h, p);
    return a;
  }();
  CHECK(build_dlambda_r(u, v, l, p).max_diff(fd) < 1e-7);
}

TEST_CASE("CDYBE holds and each dynamical term matters") {
  std::mt19937_64 g(2);
  std::uniform_real_distribution<double> d(-0.4, 0.4);
  for (int i = 0; i < 10; ++i) {
    const EllipticParams p(cplx{d(g), 0.9 + d(g)});
    const cplx u1{d(g), d(g)}, u2{d(g), d(g)}, u3{d(g), d(g)}, l{d(g), d(g)};
    CHECK(cdybe_residual(u1, u2, u3, l, p) < 1e-10);
    CHECK(cdybe_residual(u1, u2, u3, l, p, 0u) > 1e-3);
    CHECK(cdybe_residual(u1, u2, u3, l, p, dyn_h2 | dyn_h3) > 1e-3);
  }
}

TEST_CASE("L-slices satisfy the rLL relations for every sign pair") {
  const EllipticParams p(cplx{0.05, 1.1});
  const cplx l{0.15, -0.2};
  // radii ordered per pair for the annulus policy
  const cplx big{0.7, 0.1}, mid{-0.2, 0.35}, small{0.1, -0.12};
  CHECK(rll_residual(big, mid, small, l, {Sign::plus, Sign::plus}, p, DomainPolicy::k0) < 1e-10);
  CHECK(rll_residual(mid, small, big, l, {Sign::minus, Sign::minus}, p, DomainPolicy::k0) < 1e-10);
  CHECK(rll_residual(big, small, mid, l, {Sign::plus, Sign::minus}, p, DomainPolicy::k0) < 1e-10);
  CHECK(rll_residual(small, big, mid, l, {Sign::minus, Sign::plus}, p, DomainPolicy::k0) < 1e-10);
  CHECK_THROWS_AS(rll_residual(small, mid, big, l, {Sign::plus, Sign::plus}, p, DomainPolicy::k0), DomainError);
  // strips order by imaginary part
  const cplx lo{0.2, -0.3}, md{-0.1, 0.0}, hi{0.3, 0.3};
  CHECK(rll_residual(lo, md, hi, l, {Sign::plus, Sign::plus}, p, DomainPolicy::cyl) < 1e-10);
  CHECK(rll_residual(md, hi, lo, l, {Sign::minus, Sign::minus}, p, DomainPolicy::cyl) < 1e-10);
  CHECK(rll_residual(lo, hi, md, l, {Sign::plus, Sign::minus}, p, DomainPolicy::cyl) < 1e-10);
  CHECK(rll_residual(hi, lo, md, l, {Sign::minus, Sign::plus}, p, DomainPolicy::cyl) < 1e-10);
}

TEST_CASE("L-slices commute with the total weight") {
  const EllipticParams p(cplx{0.0, 1.0});
  CHECK(hh_commutator(l_slice(0.3, 0.1, 0.2, Sign::plus, p)).norm() == 0.0);
  CHECK(hh_commutator(l_slice(0.1, 0.3, 0.2, Sign::minus, p)).norm() == 0.0);
}

TEST_CASE("non-dynamical CYBE for every degenerate family") {
  const TrigParams tp{cplx{0.4, 0.05}, cplx{1.2, 0.3}};
  for (DegenerateKind k : {DegenerateKind::r_a_k0, DegenerateKind::r_b_k0}) {
    CAPTURE(kind_name(k));
    CHECK(cybe_residual(k, cplx{0.7, 0.1}, cplx{0.2, 0.4}, cplx{0.1, -0.05}) < 1e-12);
    CHECK_THROWS_AS(cybe_residual(k, cplx{0.1, 0.0}, cplx{0.5, 0.0}, cplx{0.7, 0.0}), DomainError);
  }
  for (DegenerateKind k : {DegenerateKind::r_a_cyl, DegenerateKind::r_b_cyl, DegenerateKind::r_c_cyl}) {
    CAPTURE(kind_name(k));
    CHECK(cybe_residual(k, cplx{0.1, -0.3}, cplx{-0.2, 0.0}, cplx{0.3, 0.25}, tp) < 1e-12);
    CHECK_THROWS_AS(cybe_residual(k, cplx{0.1, 0.3}, cplx{-0.2, 0.0}, cplx{0.3, -0.25}, tp), DomainError);
  }
}
