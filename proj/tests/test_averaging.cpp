#include <doctest.h>

#include <cmath>

#include "ellr/averaging.hpp"
#include "ellr/errors.hpp"
#include "ellr/rmatrix.hpp"

using namespace ellr;

TEST_CASE("averaged cotangents converge to g0 and g_lambda") {
  const EllipticParams p(cplx{0.1, 1.0});
  const cplx l{0.3, -0.2};
  for (cplx u : {cplx{0.2, -0.3}, cplx{-0.35, 0.4}, cplx{0.1, 0.05}}) {
    const AveragingConfig c0{default_elliptic_N(u, std::nullopt, p), TailMode::paired};
    CHECK(std::abs(vp_ctg_sum(u, p, c0) - g0(u, p)) < 1e-10);
    const AveragingConfig cl{default_elliptic_N(u, l, p), TailMode::paired};
    CHECK(std::abs(vp_glambda_sum(u, l, Sign::plus, p, cl) - g_lambda(u, l, p)) < 1e-10);
    CHECK(std::abs(vp_glambda_sum(u, l, Sign::minus, p, cl) - g_lambda(u, -l, p)) < 1e-10);
  }
}

TEST_CASE("plain and paired tails agree for the elliptic sums") {
  const EllipticParams p(cplx{0.0, 1.0});
  const cplx u{0.2, -0.3};
  const double a = std::abs(vp_ctg_sum(u, p, {30, TailMode::paired}) - g0(u, p));
  const double b = std::abs(vp_ctg_sum(u, p, {30, TailMode::plain}) - g0(u, p));
  CHECK(a < 1e-12);
  CHECK(b < 1e-10);
}

TEST_CASE("one-sided truncation does not converge") {
  const EllipticParams p(cplx{0.0, 1.0});
  const cplx u{0.2, -0.3};
  const double e10 = std::abs(vp_ctg_sum(u, p, {10, TailMode::one_sided}) - g0(u, p));
  const double e40 = std::abs(vp_ctg_sum(u, p, {40, TailMode::one_sided}) - g0(u, p));
  CHECK(e10 > 1.0);
  CHECK(e40 > e10);
}

TEST_CASE("lambda band is enforced") {
  const EllipticParams p(cplx{0.0, 1.0});
  CHECK_THROWS_AS(vp_glambda_sum(cplx{0.2, -0.3}, cplx{0.3, 0.2}, Sign::plus, p, {}), DomainError);
  CHECK_THROWS_AS(vp_glambda_sum(cplx{0.2, -0.3}, cplx{0.3, -1.2}, Sign::plus, p, {}), DomainError);
}

TEST_CASE("matrix averaging reproduces the elliptic r-matrix") {
  const EllipticParams p(cplx{0.0, 1.0});
  const cplx u{0.2, -0.3}, l{0.3, -0.2};
  const RMatrix4 target = build_r(u, 0.0, l, p);
  CHECK(average_rmatrix_elliptic(u, l, p, {30, TailMode::paired}).max_diff(target) < 1e-8);
  CHECK(average_rmatrix_elliptic(u, l, p, {30, TailMode::paired}, true, TrigRepr::series).max_diff(target) < 1e-8);
}

TEST_CASE("without the sign switch the average fails") {
  const EllipticParams p(cplx{0.0, 1.0});
  const cplx u{0.2, -0.3}, l{0.3, -0.2};
  CHECK_THROWS_AS(average_rmatrix_elliptic(u, l, p, {30, TailMode::paired}, false, TrigRepr::closed), DomainError);
  const RMatrix4 target = build_r(u, 0.0, l, p);
  const double e = average_rmatrix_elliptic(u, l, p, {30, TailMode::paired}, false, TrigRepr::series).max_diff(target);
  CHECK(!(e < 1.0));
}

TEST_CASE("rational to trigonometric averaging converges algebraically") {
  const cplx u{0.2, -0.3}, mu{0.5}, eta{1.0};
  const cplx target = rational_to_trig_target(u, mu, eta);
  double prev_paired = 1.0, prev_plain = 1.0;
  for (int N : {100, 200, 400}) {
    const double paired = std::abs(vp_rational_to_trig(u, mu, eta, {N, TailMode::paired}) - target);
    const double plain = std::abs(vp_rational_to_trig(u, mu, eta, {N, TailMode::plain}) - target);
    CHECK(paired < prev_paired / 3.0);
    CHECK(plain < prev_plain / 3.0);
    CHECK(paired < plain);
    prev_paired = paired;
    prev_plain = plain;
  }
  CHECK(prev_paired < 1e-6);
}

TEST_CASE("rational averaging needs real mu in the zone") {
  CHECK_THROWS_AS(vp_rational_to_trig(cplx{0.2, -0.3}, cplx{0.5, 0.1}, 1.0, {}), DomainError);
  CHECK_THROWS_AS(vp_rational_to_trig(cplx{0.2, -0.3}, 1.5, 1.0, {}), DomainError);
}

TEST_CASE("averaged rational r-matrix approaches the trigonometric one") {
  const cplx u{0.2, -0.3}, mu{0.5}, eta{1.0};
  const RMatrix4 target = build_degenerate_r(DegenerateKind::r_c_cyl, u, 0.0, TrigParams{mu, eta});
  const double e100 = average_rmatrix_c(u, mu, eta, {100, TailMode::paired}).max_diff(target);
  const double e400 = average_rmatrix_c(u, mu, eta, {400, TailMode::paired}).max_diff(target);
  CHECK(e400 < e100 / 3.0);
  CHECK(e400 < 1e-2);
}

TEST_CASE("default truncations") {
  const EllipticParams p(cplx{0.0, 1.0});
  CHECK(default_elliptic_N(cplx{0.2, -0.3}, std::nullopt, p) > 0);
  CHECK(default_elliptic_N(cplx{0.2, -0.3}, cplx{0.3, -0.2}, p) >= default_elliptic_N(cplx{0.2, -0.3}, std::nullopt, p));
  CHECK(default_rational_N(1e-6) == 100000);
}
