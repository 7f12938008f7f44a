#pragma once

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace ellr {

// Reads ELLIPTIC_RMATRIX_THREADS once and caps the OpenMP team size.
void configure_threads_from_env();
int max_threads();

// Evaluates f(0..n-1) across threads. Results land by index, so any reduction done
// afterwards in index order is independent of the thread count.
// The first exception thrown by f is rethrown after the loop.
template <class F>
auto parallel_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
  const long long count = static_cast<long long>(n);
  std::exception_ptr err;
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ellr_parallel_map_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

template <class F>
auto serial_map(std::size_t n, F&& f) -> std::vector<std::invoke_result_t<F&, std::size_t>> {
  std::vector<std::invoke_result_t<F&, std::size_t>> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
  return out;
}

}  // namespace ellr
