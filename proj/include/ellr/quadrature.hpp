#pragma once

#include <functional>

#include "ellr/theta.hpp"

namespace ellr {

using ComplexFn = std::function<cplx(cplx)>;

// (1/2 pi i) times the contour integral over |z| = radius, M-point trapezoid rule.
// Samples are taken in parallel and summed in node order.
cplx circle_pairing(const ComplexFn& f, double radius, int M);
cplx circle_pairing_serial(const ComplexFn& f, double radius, int M);

// (1/2 pi i) times the integral over [-1/2, 1/2] + i height, M-point periodic trapezoid rule.
cplx segment_pairing(const ComplexFn& f, double height, int M);
cplx segment_pairing_serial(const ComplexFn& f, double height, int M);

}  // namespace ellr
