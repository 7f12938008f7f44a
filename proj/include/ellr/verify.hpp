#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ellr/theta.hpp"

namespace ellr {

enum class OutputFormat { json, csv };

struct RunConfig {
  std::optional<cplx> tau;     // fixed modulus; random per sample when absent
  std::optional<cplx> lambda;  // fixed dynamical parameter where a suite uses one
  std::optional<cplx> mu;      // cybe-c
  std::optional<cplx> eta;     // cybe-c
  std::optional<double> tol;   // suite default when absent
  int samples = 20;
  std::uint64_t seed = 1;
  int quadrature_nodes = 128;
  int truncation = 12;  // dual basis order
  OutputFormat output = OutputFormat::json;
};

// Re-checks the fixed parameters against the domains the suites need. Throws DomainError.
void validate_config(const RunConfig& cfg);

struct Failure {
  std::string inputs;
  double residual;
  std::string error;  // empty unless evaluation threw
};

struct VerificationReport {
  std::string suite;
  std::string identity;
  std::uint64_t seed = 0;
  int samples = 0;
  double tolerance = 0.0;
  double max_residual = 0.0;
  double mean_residual = 0.0;
  std::vector<Failure> failures;
  bool passed = false;

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

struct SuiteInfo {
  std::string_view name;
  std::string_view identity;
  double default_tol;
};

const std::vector<SuiteInfo>& suites();
const SuiteInfo& find_suite(std::string_view name);  // throws std::invalid_argument

// Samples are drawn serially from seed; evaluation is parallel unless parallel = false.
// The report does not depend on the thread count.
VerificationReport run_suite(std::string_view name, const RunConfig& cfg, bool parallel = true);

}  // namespace ellr
