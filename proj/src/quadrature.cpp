#include "ellr/quadrature.hpp"

#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "ellr/errors.hpp"

namespace ellr {

namespace {

constexpr int parallel_cutoff = 256;

void check_nodes(int M) {
  if (M < 32) throw std::invalid_argument("quadrature needs at least 32 nodes");
}

cplx circle_node(double radius, int k, int M) { return std::polar(radius, 2.0 * pi * k / M); }
cplx segment_node(double height, int k, int M) { return cplx{-0.5 + static_cast<double>(k) / M, height}; }

cplx finite_or_throw(cplx v, cplx z) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw QuadratureError("non-finite integrand sample at z = " + std::to_string(z.real()) + "+" +
                          std::to_string(z.imag()) + "i");
  return v;
}

cplx ordered_sum(const std::vector<cplx>& v) {
  cplx s{0.0};
  for (const cplx& x : v) s += x;
  return s;
}

template <class G>
std::vector<cplx> sample_parallel(int M, const G& g) {
  std::vector<cplx> v(M);
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < M; ++k) {
    try {
      v[k] = g(k);
    } catch (...) {
#pragma omp critical(ellr_quadrature_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return v;
}

}  // namespace

cplx circle_pairing_serial(const ComplexFn& f, double radius, int M) {
  check_nodes(M);
  cplx s{0.0};
  for (int k = 0; k < M; ++k) {
    const cplx z = circle_node(radius, k, M);
    s += finite_or_throw(f(z), z) * z;
  }
  return s / static_cast<double>(M);
}

cplx circle_pairing(const ComplexFn& f, double radius, int M) {
  check_nodes(M);
  if (M < parallel_cutoff) return circle_pairing_serial(f, radius, M);
  const std::vector<cplx> v = sample_parallel(M, [&](int k) {
    const cplx z = circle_node(radius, k, M);
    return finite_or_throw(f(z), z) * z;
  });
  return ordered_sum(v) / static_cast<double>(M);
}

cplx segment_pairing_serial(const ComplexFn& f, double height, int M) {
  check_nodes(M);
  cplx s{0.0};
  for (int k = 0; k < M; ++k) {
    const cplx z = segment_node(height, k, M);
    s += finite_or_throw(f(z), z);
  }
  return s / (static_cast<double>(M) * 2.0 * pi * I);
}

cplx segment_pairing(const ComplexFn& f, double height, int M) {
  check_nodes(M);
  if (M < parallel_cutoff) return segment_pairing_serial(f, height, M);
  const std::vector<cplx> v = sample_parallel(M, [&](int k) {
    const cplx z = segment_node(height, k, M);
    return finite_or_throw(f(z), z);
  });
  return ordered_sum(v) / (static_cast<double>(M) * 2.0 * pi * I);
}

}  // namespace ellr
