#include "ellr/parallel.hpp"

#include <cstdlib>
#include <mutex>
#include <string>

#include <omp.h>

namespace ellr {

void configure_threads_from_env() {
  static std::once_flag once;
  std::call_once(once, [] {
    const char* s = std::getenv("ELLIPTIC_RMATRIX_THREADS");
    if (!s || !*s) return;
    char* end = nullptr;
    const long n = std::strtol(s, &end, 10);
    if (end && *end == '\0' && n >= 1) omp_set_num_threads(static_cast<int>(n));
  });
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace ellr
