#pragma once

#include <Eigen/Dense>

#include "ellr/theta.hpp"

namespace ellr {

using Mat2 = Eigen::Matrix<cplx, 2, 2>;
using Mat4 = Eigen::Matrix<cplx, 4, 4>;
using Mat8 = Eigen::Matrix<cplx, 8, 8>;

struct SL2Basis {
  Mat2 H, E, F;
};

// H = diag(1, -1), E = e_12, F = e_21.
const SL2Basis& sl2();

// Matrix on C^2 (x) C^2 in the basis (e1e1, e1e2, e2e1, e2e2), nonzero only on the weight-zero block.
// Entry names are 1-based: d11..d44 on the diagonal, e23 and e32 off it.
struct RMatrix4 {
  cplx d11{}, d22{}, d33{}, d44{}, e23{}, e32{};

  Mat4 matrix() const;
  // Throws std::invalid_argument if A has anything outside the weight-zero block.
  static RMatrix4 from_matrix(const Mat4& A);

  RMatrix4& operator+=(const RMatrix4& o);
  friend RMatrix4 operator*(cplx s, RMatrix4 r);
  // Largest entrywise |difference|.
  double max_diff(const RMatrix4& o) const;
};

// A acting on tensor slots (i, j) of C^2 (x) C^2 (x) C^2, slot indices 0..2, i != j.
// The first tensor factor of A lands in slot i.
Mat8 embed(const Mat4& A, int i, int j);
// X acting on one slot.
Mat8 embed1(const Mat2& X, int slot);
// P A P with P the flip of the two factors.
Mat4 swap12(const Mat4& A);
// [H (x) 1 + 1 (x) H, A].
Mat4 hh_commutator(const Mat4& A);

template <class M>
M commutator(const M& a, const M& b) {
  return a * b - b * a;
}

}  // namespace ellr
