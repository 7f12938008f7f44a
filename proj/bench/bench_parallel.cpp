// Serial reference vs OpenMP kernels: wall time and agreement.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "ellr/kernels.hpp"
#include "ellr/parallel.hpp"
#include "ellr/quadrature.hpp"
#include "ellr/verify.hpp"

using namespace ellr;

namespace {

template <class F>
double seconds(F&& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, double ts, double tp, double diff) {
  std::printf("%-34s %12.6f %12.6f %8.2fx %12.3e\n", name.c_str(), ts, tp, ts / tp, diff);
}

}  // namespace

int main(int argc, char** argv) {
  configure_threads_from_env();
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int reps = quick ? 1 : 5;
  std::printf("threads: %d\n", max_threads());
  std::printf("%-34s %12s %12s %9s %12s\n", "kernel", "serial [s]", "parallel [s]", "speedup", "max |diff|");

  const EllipticParams p(cplx{0.1, 1.1});
  const cplx lambda{0.2, -0.3}, u{0.45, 0.1};
  const ComplexFn f = [&](cplx z) { return g_lambda(u - z, lambda, p) * g0(z - 0.1, p); };

  const std::vector<int> sizes = quick ? std::vector<int>{1024} : std::vector<int>{1024, 16384, 131072};
  for (int M : sizes) {
    cplx a, b;
    const double ts = seconds([&] { a = circle_pairing_serial(f, 0.3, M); }, reps);
    const double tp = seconds([&] { b = circle_pairing(f, 0.3, M); }, reps);
    row("circle pairing M=" + std::to_string(M), ts, tp, std::abs(a - b));
    const double ts2 = seconds([&] { a = segment_pairing_serial(f, -0.2, M); }, reps);
    const double tp2 = seconds([&] { b = segment_pairing(f, -0.2, M); }, reps);
    row("segment pairing M=" + std::to_string(M), ts2, tp2, std::abs(a - b));
  }

  for (const char* suite : {"convolution-k0", "convolution-cyl", "cdybe"}) {
    RunConfig cfg;
    cfg.samples = quick ? 14 : 140;
    VerificationReport rs, rp;
    const double ts = seconds([&] { rs = run_suite(suite, cfg, false); }, 1);
    const double tp = seconds([&] { rp = run_suite(suite, cfg, true); }, 1);
    const bool same = rs.to_json().dump() == rp.to_json().dump();
    row(std::string("suite ") + suite, ts, tp, same ? 0.0 : std::abs(rs.max_residual - rp.max_residual));
    if (!same) {
      std::printf("serial and parallel reports differ for %s\n", suite);
      return 1;
    }
  }
  return 0;
}
