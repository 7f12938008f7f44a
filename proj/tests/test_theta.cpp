#include <doctest.h>

#include <cmath>
#include <random>

#include "ellr/errors.hpp"
#include "ellr/theta.hpp"

using namespace ellr;

namespace {

// sin(pi u) prod (1 - 2 q^{2n} cos 2 pi u + q^{4n}) / (pi prod (1 - q^{2n})^2), q = e^{i pi tau}
cplx theta_product(cplx u, cplx tau) {
  const cplx q = std::exp(I * pi * tau);
  const cplx c = std::cos(2.0 * pi * u);
  cplx num = std::sin(pi * u), den = pi;
  cplx q2n = 1.0;
  for (int n = 1; n < 200000; ++n) {
    q2n *= q * q;
    num *= 1.0 - 2.0 * q2n * c + q2n * q2n;
    den *= (1.0 - q2n) * (1.0 - q2n);
    if (std::abs(q2n) < 1e-18) break;
  }
  return num / den;
}

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("theta matches the product formula") {
  std::mt19937_64 g(3);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  for (int i = 0; i < 50; ++i) {
    const cplx tau{d(g), 0.3 + 1.7 * (d(g) + 0.5)};
    const cplx u{d(g) * 2.0, d(g) * 2.0 * tau.imag()};
    const EllipticParams p(tau);
    CHECK(rel(theta(u, p), theta_product(u, tau)) < 1e-12);
  }
}

TEST_CASE("theta normalization and parity") {
  const EllipticParams p(cplx{0.2, 0.7});
  const ThetaDerivs z = theta_derivs(0.0, p);
  CHECK(std::abs(z.d0) < 1e-15);
  CHECK(std::abs(z.d1 - 1.0) < 1e-14);
  CHECK(std::abs(z.d2) < 1e-14);
  const cplx u{0.31, -0.17};
  CHECK(rel(theta(-u, p), -theta(u, p)) < 1e-14);
}

TEST_CASE("theta quasi-periodicity across several cells") {
  const cplx tau{-0.3, 0.45};
  const EllipticParams p(tau);
  const cplx u{0.13, 0.07};
  const cplx t = theta(u, p);
  CHECK(rel(theta(u + 1.0, p), -t) < 1e-13);
  CHECK(rel(theta(u + tau, p), -std::exp(-2.0 * pi * I * u - pi * I * tau) * t) < 1e-12);
  // two steps of tau: factor e^{-4 pi i u - 4 pi i tau}
  CHECK(rel(theta(u + 2.0 * tau, p), std::exp(-4.0 * pi * I * u - 4.0 * pi * I * tau) * t) < 1e-12);
  CHECK(rel(theta(u - 3.0, p), -t) < 1e-13);
}

TEST_CASE("theta derivatives agree with finite differences") {
  const EllipticParams p(cplx{0.1, 0.9});
  const cplx u{0.27, 0.11};
  const ThetaDerivs d = theta_derivs(u, p);
  const double h = 1e-3;
  auto f = [&](double s) { return theta(u + s * h, p); };
  // fourth-order central stencils
  const cplx d1 = (-f(2) + 8.0 * f(1) - 8.0 * f(-1) + f(-2)) / (12.0 * h);
  const cplx d2 = (-f(2) + 16.0 * f(1) - 30.0 * f(0) + 16.0 * f(-1) - f(-2)) / (12.0 * h * h);
  const cplx d3 = (-f(3) + 8.0 * f(2) - 13.0 * f(1) + 13.0 * f(-1) - 8.0 * f(-2) + f(-3)) / (8.0 * h * h * h);
  CHECK(rel(d.d1, d1) < 1e-9);
  CHECK(rel(d.d2, d2) < 1e-7);
  CHECK(rel(d.d3, d3) < 1e-4);
}

TEST_CASE("theta Taylor coefficients extend the derivative table") {
  const EllipticParams p(cplx{0.0, 1.2});
  const cplx c{0.2, -0.3};
  const std::vector<cplx> t = theta_taylor(c, p, 8);
  const ThetaDerivs d = theta_derivs(c, p);
  CHECK(rel(t[1], d.d1) < 1e-14);
  CHECK(rel(6.0 * t[3], d.d3) < 1e-14);
  // resummed Taylor series reproduces theta nearby
  const cplx h{0.01, 0.005};
  cplx s = 0.0, hk = 1.0;
  for (cplx a : t) {
    s += a * hk;
    hk *= h;
  }
  CHECK(rel(s, theta(c + h, p)) < 1e-13);
}

TEST_CASE("modular path agrees with the direct series and the product") {
  for (cplx tau : {cplx{0.0, 0.06}, cplx{0.3, 0.07}}) {
    const EllipticParams p(tau, 1e-15, 4096);
    for (cplx u : {cplx{0.2, 0.0}, cplx{0.31, 0.01}, cplx{-0.4, -0.02}}) {
      const ThetaDerivs a = theta_derivs(u, p);
      const ThetaDerivs b = theta_derivs_small_imtau(u, p);
      CHECK(rel(b.d0, a.d0) < 1e-9);
      CHECK(rel(b.d1, a.d1) < 1e-9);
      CHECK(rel(b.d2, a.d2) < 1e-8);
    }
  }
  const cplx tau{0.1, 0.02};
  const EllipticParams p(tau);
  const cplx u{0.23, 0.004};
  CHECK(rel(theta_small_imtau(u, p), theta_product(u, tau)) < 1e-8);
  CHECK(rel(theta_derivs_auto(u, p).d0, theta_product(u, tau)) < 1e-8);
}

TEST_CASE("direct series reports overflow instead of a wrong value") {
  const EllipticParams p(cplx{0.0, 0.01}, 1e-15, 8);
  CHECK_THROWS_AS(theta(cplx{0.3, 0.0}, p), TruncationOverflow);
}

TEST_CASE("invalid moduli are rejected") {
  CHECK_THROWS_AS(EllipticParams(cplx{0.0, -0.5}), InvalidModulus);
  CHECK_THROWS_AS(EllipticParams(cplx{0.3, 0.0}), InvalidModulus);
  CHECK_THROWS_AS(EllipticParams(cplx{std::nan(""), 1.0}), InvalidModulus);
}

TEST_CASE("lattice distance") {
  const cplx tau{0.25, 0.8};
  CHECK(lattice_distance(0.0, tau) == doctest::Approx(0.0));
  CHECK(lattice_distance(2.0 + 3.0 * tau + cplx{0.01, 0.0}, tau) == doctest::Approx(0.01));
  CHECK(lattice_distance(cplx{0.5, 0.0}, tau) == doctest::Approx(0.5));
}
