#include <doctest.h>

#include <cmath>
#include <set>

#include "ellr/complex_io.hpp"
#include "ellr/errors.hpp"
#include "ellr/verify.hpp"

using namespace ellr;

TEST_CASE("complex numbers round-trip through text") {
  CHECK(parse_complex("0.3-0.1i") == cplx{0.3, -0.1});
  CHECK(parse_complex("i") == cplx{0.0, 1.0});
  CHECK(parse_complex("-i") == cplx{0.0, -1.0});
  CHECK(parse_complex("-0.5i") == cplx{0.0, -0.5});
  CHECK(parse_complex("2") == cplx{2.0, 0.0});
  CHECK(parse_complex("1+2j") == cplx{1.0, 2.0});
  CHECK(parse_complex("1e-3-2.5e-1i") == cplx{1e-3, -0.25});
  CHECK(parse_complex("1.5E+2+3E-2i") == cplx{150.0, 0.03});
  for (const char* bad : {"", "abc", "1+", "1+2", "1+2k", "i2", "1++2i"}) CHECK_THROWS_AS(parse_complex(bad), std::invalid_argument);
  for (cplx z : {cplx{0.1, -0.2}, cplx{1.0 / 3.0, 1e-300}, cplx{-2.5e17, 0.0}})
    CHECK(parse_complex(format_complex(z)) == z);
  CHECK(format_complex(cplx{-0.0, -0.0}) == "0+0i");
}

TEST_CASE("suite table") {
  const std::set<std::string_view> expected{"quasi-periodicity", "fay", "duality", "projections", "convolution-k0",
                                            "convolution-cyl", "shift", "heat", "hhl", "cdybe", "rll",
                                            "cybe-a", "cybe-b", "cybe-c", "green-series"};
  std::set<std::string_view> got;
  for (const auto& s : suites()) {
    got.insert(s.name);
    CHECK(!s.identity.empty());
    CHECK(s.default_tol > 0.0);
  }
  CHECK(got == expected);
  CHECK_THROWS_AS(find_suite("nope"), std::invalid_argument);
}

TEST_CASE("every suite passes on a small sample") {
  RunConfig cfg;
  cfg.samples = 14;
  for (const auto& s : suites()) {
    CAPTURE(s.name);
    const VerificationReport r = run_suite(s.name, cfg);
    CHECK(r.passed);
    CHECK(r.failures.empty());
    CHECK(r.max_residual < r.tolerance);
  }
}

TEST_CASE("reports are deterministic and independent of threading") {
  RunConfig cfg;
  cfg.samples = 12;
  cfg.seed = 99;
  for (const char* name : {"fay", "convolution-cyl", "rll"}) {
    const std::string a = run_suite(name, cfg).to_json().dump();
    const std::string b = run_suite(name, cfg).to_json().dump();
    const std::string c = run_suite(name, cfg, false).to_json().dump();
    CHECK(a == b);
    CHECK(a == c);
  }
  cfg.seed = 100;
  CHECK(run_suite("fay", cfg).to_json().dump() != run_suite("fay", RunConfig{}).to_json().dump());
}

TEST_CASE("a tolerance below roundoff fails with echoed inputs") {
  RunConfig cfg;
  cfg.samples = 1;
  cfg.seed = 7;
  cfg.tol = 1e-20;
  const VerificationReport r = run_suite("cdybe", cfg);
  CHECK_FALSE(r.passed);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].inputs.find("tau=") != std::string::npos);
  const auto j = r.to_json();
  CHECK(j["passed"] == false);
  CHECK(j["failures"][0].contains("inputs"));
  const std::string csv = r.to_csv();
  CHECK(csv.rfind("suite,seed,samples,tolerance,max_residual,mean_residual,failures,passed\n", 0) == 0);
}

TEST_CASE("report schema") {
  RunConfig cfg;
  cfg.samples = 3;
  const auto j = run_suite("quasi-periodicity", cfg).to_json();
  for (const char* k : {"suite", "seed", "samples", "tolerance", "max_residual", "mean_residual", "failures", "passed"})
    CHECK(j.contains(k));
}

TEST_CASE("fixed parameters are honoured and validated") {
  RunConfig cfg;
  cfg.samples = 5;
  cfg.tau = cplx{0.2, 0.7};
  cfg.lambda = cplx{0.1, -0.2};
  CHECK(run_suite("fay", cfg).passed);
  CHECK(run_suite("cdybe", cfg).passed);
  cfg.tol = 1e-30;
  const VerificationReport r = run_suite("fay", cfg);
  REQUIRE(!r.failures.empty());
  CHECK(r.failures.front().inputs.find("tau=0.2+0.7i") != std::string::npos);
  CHECK(r.failures.front().inputs.find("lambda=0.1-0.2i") != std::string::npos);

  RunConfig bad;
  bad.tau = cplx{0.0, -1.0};
  CHECK_THROWS_AS(validate_config(bad), InvalidModulus);
  bad = {};
  bad.tau = cplx{0.0, 1.0};
  bad.lambda = cplx{0.0, 1.5};
  CHECK_THROWS_AS(validate_config(bad), DomainError);
  bad = {};
  bad.mu = cplx{1.5};
  CHECK_THROWS_AS(validate_config(bad), DomainError);
  bad = {};
  bad.samples = 0;
  CHECK_THROWS_AS(validate_config(bad), DomainError);
  bad = {};
  bad.tol = -1.0;
  CHECK_THROWS_AS(validate_config(bad), DomainError);
}

TEST_CASE("contour samplers adapt to the node count") {
  RunConfig cfg;
  cfg.samples = 12;
  cfg.quadrature_nodes = 48;
  CHECK(run_suite("convolution-k0", cfg).passed);
  CHECK(run_suite("convolution-cyl", cfg).passed);
}
