#pragma once

#include <utility>

#include "ellr/degenerations.hpp"
#include "ellr/kernels.hpp"
#include "ellr/matrix.hpp"

namespace ellr {

// Dynamical elliptic r-matrix at w = u - v:
// diag (g0/2, -g0/2, -g0/2, g0/2)(w), e23 = g_{-l}(w), e32 = g_l(w).
// The same entries serve the annulus and the cylinder families.
RMatrix4 build_r(cplx u, cplx v, cplx lambda, const EllipticParams& p);
// Entrywise d/dlambda of build_r.
RMatrix4 build_dlambda_r(cplx u, cplx v, cplx lambda, const EllipticParams& p);

// Which H-weighted derivative terms enter the right side of the dynamical equation.
enum DynamicalTerms : unsigned { dyn_h1 = 1u, dyn_h2 = 2u, dyn_h3 = 4u, dyn_all = 7u };

// ||[r12,r13] + [r12,r23] + [r13,r23] - (H1 d r23 - H2 d r13 + H3 d r12)||_F / max(1, ||bracket sum||_F),
// with r_ij = build_r(u_i, u_j, lambda) in slots (i, j).
double cdybe_residual(cplx u1, cplx u2, cplx u3, cplx lambda, const EllipticParams& p, unsigned terms = dyn_all);

// L+(u) = r(u, w) and L-(u) = -P r(w, u) P, with the auxiliary factor first.
Mat4 l_slice(cplx u, cplx w, cplx lambda, Sign sign, const EllipticParams& p);

// none: no ordering checks. k0: annulus orders (|u| > |w| for L+, |u| < |w| for L-).
// cyl: strips (u - w LOWER for L+, UPPER for L-). In both, r12 needs |u| > |v| (resp. u - v LOWER),
// reversed for the (-, +) pair.
enum class DomainPolicy { none, k0, cyl };

// Residual of [L1(u), L2(v)] = [L1 + L2, r12(u, v)] + H1 dL2 - H2 dL1 + H3 dr12 in the triple
// evaluation representation with the third slot at w and central terms dropped.
// Normalized like cdybe_residual.
double rll_residual(cplx u, cplx v, cplx w, cplx lambda, std::pair<Sign, Sign> signs, const EllipticParams& p,
                    DomainPolicy policy = DomainPolicy::none);

// ||[X12,X13] + [X12,X23] + [X13,X23]||_F / max(1, largest single commutator norm), X_ij built from
// build_degenerate_r(kind, u_i, u_j). Cylinder kinds need Im u1 < Im u2 < Im u3,
// annulus kinds |u1| > |u2| > |u3|.
double cybe_residual(DegenerateKind kind, cplx u1, cplx u2, cplx u3, const TrigParams& tp = {});

}  // namespace ellr
