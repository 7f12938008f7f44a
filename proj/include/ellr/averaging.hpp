#pragma once

#include "ellr/degenerations.hpp"
#include "ellr/kernels.hpp"
#include "ellr/matrix.hpp"

namespace ellr {

// plain: sum over -N..N in index order. paired: n and -n combined, so cancelling constant tails
// never get added separately; the rational sum also puts half weight on the outermost pair.
// one_sided: n = 0..N only, kept as a negative control.
enum class TailMode { plain, paired, one_sided };

struct AveragingConfig {
  int N = 30;
  TailMode tail = TailMode::paired;
};

// sum_n pi ctg pi (u - n tau), converging to g0(u).
cplx vp_ctg_sum(cplx u, const EllipticParams& p, const AveragingConfig& cfg);

// plus:  sum_n pi e^{-2 pi i n l} (ctg pi (u - n tau) + i) -> g_l(u)
// minus: sum_n pi e^{+2 pi i n l} (ctg pi (u - n tau) - i) -> g_{-l}(u)
// Needs -Im tau < Im l < 0.
cplx vp_glambda_sum(cplx u, cplx lambda, Sign sign, const EllipticParams& p, const AveragingConfig& cfg);

// How the trigonometric terms are evaluated inside the matrix average.
// closed: pi ctg with the half-plane of the chosen regularization enforced.
// series: the truncated geometric series of psi~+ or psi~-.
enum class TrigRepr { closed, series };

// sum_n (A^n (x) id) r^{(b), s_n}(u - n tau), with A scaling e23 by e^{2 pi i l} and e32 by e^{-2 pi i l}.
// s_n is + for n >= 0 and - for n < 0; theta_switch = false uses + throughout.
RMatrix4 average_rmatrix_elliptic(cplx u, cplx lambda, const EllipticParams& p, const AveragingConfig& cfg,
                                  bool theta_switch = true, TrigRepr repr = TrigRepr::closed);

// sum_n e^{2 pi i mu n}/(u - i n/eta) -> 2 pi eta e^{2 pi eta mu u}/(e^{2 pi eta u} - 1).
// Needs mu real and in the zone.
cplx vp_rational_to_trig(cplx u, cplx mu, cplx eta, const AveragingConfig& cfg);
// The closed trigonometric side of the same identity.
cplx rational_to_trig_target(cplx u, cplx mu, cplx eta);

// sum_n (A^n (x) id) r^{(a)}(u - i n/eta) with A: E -> e^{2 pi i mu} E.
RMatrix4 average_rmatrix_c(cplx u, cplx mu, cplx eta, const AveragingConfig& cfg);

// N from the geometric tail bound for the elliptic targets (lambda absent: vp_ctg_sum).
int default_elliptic_N(cplx u, std::optional<cplx> lambda, const EllipticParams& p, double tol = 1e-12);
// ceil(10/tol) capped at 1e5.
int default_rational_N(double tol = 1e-6);

}  // namespace ellr
