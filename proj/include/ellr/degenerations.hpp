#pragma once

#include <string_view>
#include <vector>

#include "ellr/matrix.hpp"
#include "ellr/theta.hpp"

namespace ellr {

enum class DegenerateKernel {
  phi_plus,         // 1/w on Im w < 0
  phi_minus,        // 1/w on Im w > 0
  psi_trig,         // pi ctg pi w, annulus family
  psi_tilde_plus,   // pi ctg pi w on Im w < 0
  psi_tilde_minus,  // pi ctg pi w on Im w > 0
  psi_cth,          // pi eta cth pi eta w on -Re(1/eta) < Im w < 0
  psi_mu_plus,      // 2 pi eta e^{-2 pi eta mu w}/(1 - e^{-2 pi eta w}) on -Re(1/eta) < Im w < 0
  psi_mu_minus,     // same closed form on 0 < Im w < Re(1/eta)
};

std::string_view kernel_name(DegenerateKernel k);

struct TrigParams {
  cplx mu{0.5};
  cplx eta{1.0};
};

inline constexpr double zone_margin = 1e-3;

// Im(eta) Im(mu)/Re(eta) < Re(mu) < Im(eta) Im(mu)/Re(eta) + 1, with margin.
bool mu_in_zone(cplx mu, cplx eta, double margin = zone_margin);
// Throws DomainError naming the zone.
void require_zone(cplx mu, cplx eta, double margin = zone_margin);

// Closed form with domain and pole checks.
cplx degenerate_kernel(DegenerateKernel k, cplx w, const TrigParams& tp = {});

// pi i + 2 pi i sum_{n=1}^{K} e^{-2 pi i n w} (sign +) or -pi i - 2 pi i sum_{n=1}^{K} e^{2 pi i n w} (sign -).
// No domain check: outside its half-plane the partial sums blow up.
cplx psi_tilde_series(cplx w, bool plus, int K);
// Terms needed for a geometric tail below tol at this w, capped at 4096.
int psi_tilde_terms(cplx w, double tol = 1e-16);

enum class DegenerationCaseId { a_rational, b_trig, c_trig_cyl };

struct DegenerationCase {
  DegenerationCaseId id = DegenerationCaseId::a_rational;
  double scale = 1.0;  // omega for cases a and c, T = Im tau for case b
  cplx tau{0.0, 1.0};  // fixed modulus of case a
  cplx lambda{0.3};    // dynamical parameter of cases a and b
  TrigParams trig;     // case c
};

enum class LimitTarget { g0, glambda };

// Max over samples of |scaled elliptic kernel - degenerate kernel|:
//   a: (1/w) g0(w/w; tau) vs 1/w,  (1/w) g_{l/w}(w/w) vs 1/l + 1/w     (w = omega here)
//   b: g0(w; iT) vs pi ctg pi w,   g_l(w; iT) vs pi ctg pi l + pi ctg pi w
//   c: (1/w) g0(w/w; i/(eta w)) vs Psi,  (1/w) g_mu(w/w; i/(eta w)) vs Psi_mu
double limit_error(const DegenerationCase& c, LimitTarget target, const std::vector<cplx>& samples);

struct LadderRow {
  double scale;
  double max_error;
};

struct LadderResult {
  std::vector<LadderRow> rows;
  double fitted_rate;  // log-log slope for a and c, log-linear slope for b
  bool monotone;
};

// Scales must be strictly increasing.
LadderResult ladder(DegenerationCase c, LimitTarget target, const std::vector<double>& scales,
                    const std::vector<cplx>& samples);

// Default sample points for each case, inside every admissible region.
std::vector<cplx> default_limit_samples(DegenerationCaseId id, LimitTarget target, const TrigParams& tp = {});

enum class DegenerateKind { r_a_k0, r_b_k0, r_a_cyl, r_b_cyl, r_c_cyl };

std::string_view kind_name(DegenerateKind k);

// Non-dynamical r-matrices of the rational and trigonometric limits.
RMatrix4 build_degenerate_r(DegenerateKind kind, cplx u, cplx v, const TrigParams& tp = {});

}  // namespace ellr
