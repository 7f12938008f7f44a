#include <doctest.h>

#include <cmath>

#include "ellr/degenerations.hpp"
#include "ellr/errors.hpp"
#include "ellr/kernels.hpp"

using namespace ellr;

namespace {

cplx ctg(cplx z) { return std::cos(z) / std::sin(z); }

}  // namespace

TEST_CASE("closed degenerate kernels") {
  const cplx lo{0.3, -0.2}, up{0.3, 0.2};
  CHECK(std::abs(degenerate_kernel(DegenerateKernel::phi_plus, lo) - 1.0 / lo) < 1e-15);
  CHECK(std::abs(degenerate_kernel(DegenerateKernel::psi_tilde_plus, lo) - pi * ctg(pi * lo)) < 1e-14);
  CHECK(std::abs(degenerate_kernel(DegenerateKernel::psi_tilde_minus, up) - pi * ctg(pi * up)) < 1e-14);
  CHECK_THROWS_AS(degenerate_kernel(DegenerateKernel::phi_plus, up), DomainError);
  CHECK_THROWS_AS(degenerate_kernel(DegenerateKernel::psi_tilde_minus, lo), DomainError);
  const TrigParams tp{cplx{0.5}, cplx{1.0}};
  const cplx eta = tp.eta;
  // at mu = 1/2 the twisted kernel is pi eta / sinh(pi eta w)
  CHECK(std::abs(degenerate_kernel(DegenerateKernel::psi_mu_plus, lo, tp) - pi * eta / std::sinh(pi * eta * lo)) < 1e-13);
  CHECK(std::abs(degenerate_kernel(DegenerateKernel::psi_cth, lo, tp) - pi * eta / std::tanh(pi * eta * lo)) < 1e-13);
}

TEST_CASE("psi~ geometric series converge on their half-planes") {
  const cplx lo{0.3, -0.2}, up{0.3, 0.2};
  CHECK(std::abs(psi_tilde_series(lo, true, psi_tilde_terms(lo)) - pi * ctg(pi * lo)) < 1e-12);
  CHECK(std::abs(psi_tilde_series(up, false, psi_tilde_terms(up)) - pi * ctg(pi * up)) < 1e-12);
  // the wrong half-plane grows without bound
  CHECK(std::abs(psi_tilde_series(up, true, 60)) > 1e20);
}

TEST_CASE("zone of mu") {
  CHECK(mu_in_zone(0.5, 1.0));
  CHECK_FALSE(mu_in_zone(1.2, 1.0));
  CHECK_FALSE(mu_in_zone(0.0, 1.0));
  CHECK(mu_in_zone(cplx{0.5, 0.1}, cplx{1.0, 0.5}));
  CHECK_THROWS_AS(require_zone(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(degenerate_kernel(DegenerateKernel::psi_mu_plus, cplx{0.1, -0.2}, TrigParams{1.5, 1.0}), DomainError);
}

TEST_CASE("rational ladder decays like omega^-2") {
  DegenerationCase c;
  c.id = DegenerationCaseId::a_rational;
  for (LimitTarget t : {LimitTarget::g0, LimitTarget::glambda}) {
    const LadderResult r = ladder(c, t, {10, 20, 40, 80}, default_limit_samples(c.id, t));
    CHECK(r.monotone);
    CHECK(r.fitted_rate == doctest::Approx(-2.0).epsilon(0.05));
  }
}

TEST_CASE("trigonometric ladder decays like e^{-2 pi T}") {
  DegenerationCase c;
  c.id = DegenerationCaseId::b_trig;
  for (LimitTarget t : {LimitTarget::g0, LimitTarget::glambda}) {
    const LadderResult r = ladder(c, t, {1.5, 2, 2.5, 3}, default_limit_samples(c.id, t));
    CHECK(r.monotone);
    CHECK(r.fitted_rate == doctest::Approx(-2.0 * pi).epsilon(0.05));
  }
}

TEST_CASE("cylinder trigonometric ladder decreases on the modular path") {
  DegenerationCase c;
  c.id = DegenerationCaseId::c_trig_cyl;
  const LadderResult r = ladder(c, LimitTarget::g0, {30, 60, 120}, default_limit_samples(c.id, LimitTarget::g0));
  CHECK(r.monotone);
  CHECK(r.fitted_rate == doctest::Approx(-1.0).epsilon(0.05));
  const LadderResult rl = ladder(c, LimitTarget::glambda, {1, 2, 3, 4}, default_limit_samples(c.id, LimitTarget::glambda));
  CHECK(rl.monotone);
  CHECK(rl.rows.back().max_error < 1e-3);
}

TEST_CASE("ladder input validation") {
  DegenerationCase c;
  CHECK_THROWS_AS(ladder(c, LimitTarget::g0, {20, 10}, default_limit_samples(c.id, LimitTarget::g0)), DomainError);
}

TEST_CASE("degenerate r-matrices") {
  const cplx u{0.3, -0.2}, v{0.05, 0.1};
  const RMatrix4 a = build_degenerate_r(DegenerateKind::r_a_cyl, u, v);
  CHECK(std::abs(a.e32 - 1.0 / (u - v)) < 1e-14);
  CHECK(hh_commutator(a.matrix()).norm() == 0.0);
  for (DegenerateKind k : {DegenerateKind::r_a_k0, DegenerateKind::r_b_k0, DegenerateKind::r_a_cyl,
                           DegenerateKind::r_b_cyl, DegenerateKind::r_c_cyl})
    CHECK(!kind_name(k).empty());
}
