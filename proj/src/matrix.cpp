#include "ellr/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ellr {

const SL2Basis& sl2() {
  static const SL2Basis b = [] {
    SL2Basis s;
    s.H << 1.0, 0.0, 0.0, -1.0;
    s.E << 0.0, 1.0, 0.0, 0.0;
    s.F << 0.0, 0.0, 1.0, 0.0;
    return s;
  }();
  return b;
}

Mat4 RMatrix4::matrix() const {
  Mat4 m = Mat4::Zero();
  m(0, 0) = d11;
  m(1, 1) = d22;
  m(2, 2) = d33;
  m(3, 3) = d44;
  m(1, 2) = e23;
  m(2, 1) = e32;
  return m;
}

RMatrix4 RMatrix4::from_matrix(const Mat4& A) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const bool block = i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
      if (!block && A(i, j) != cplx{0.0}) throw std::invalid_argument("matrix leaves the weight-zero block");
    }
  return {A(0, 0), A(1, 1), A(2, 2), A(3, 3), A(1, 2), A(2, 1)};
}

RMatrix4& RMatrix4::operator+=(const RMatrix4& o) {
  d11 += o.d11;
  d22 += o.d22;
  d33 += o.d33;
  d44 += o.d44;
  e23 += o.e23;
  e32 += o.e32;
  return *this;
}

RMatrix4 operator*(cplx s, RMatrix4 r) {
  r.d11 *= s;
  r.d22 *= s;
  r.d33 *= s;
  r.d44 *= s;
  r.e23 *= s;
  r.e32 *= s;
  return r;
}

double RMatrix4::max_diff(const RMatrix4& o) const {
  return std::max({std::abs(d11 - o.d11), std::abs(d22 - o.d22), std::abs(d33 - o.d33), std::abs(d44 - o.d44),
                   std::abs(e23 - o.e23), std::abs(e32 - o.e32)});
}

namespace {

int bit(int index, int slot) { return (index >> (2 - slot)) & 1; }

}  // namespace

Mat8 embed(const Mat4& A, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw std::invalid_argument("embed: slots must be distinct in 0..2");
  const int k = 3 - i - j;
  Mat8 out = Mat8::Zero();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      if (bit(r, k) != bit(c, k)) continue;
      out(r, c) = A(2 * bit(r, i) + bit(r, j), 2 * bit(c, i) + bit(c, j));
    }
  return out;
}

Mat8 embed1(const Mat2& X, int slot) {
  if (slot < 0 || slot > 2) throw std::invalid_argument("embed1: slot must be in 0..2");
  Mat8 out = Mat8::Zero();
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) {
      bool same = true;
      for (int s = 0; s < 3; ++s)
        if (s != slot && bit(r, s) != bit(c, s)) same = false;
      if (same) out(r, c) = X(bit(r, slot), bit(c, slot));
    }
  return out;
}

Mat4 swap12(const Mat4& A) {
  Mat4 P = Mat4::Zero();
  P(0, 0) = P(3, 3) = 1.0;
  P(1, 2) = P(2, 1) = 1.0;
  return P * A * P;
}

Mat4 hh_commutator(const Mat4& A) {
  Mat4 HH = Mat4::Zero();
  HH(0, 0) = 2.0;
  HH(3, 3) = -2.0;
  return commutator(HH, A);
}

}  // namespace ellr
