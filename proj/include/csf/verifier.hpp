#pragma once

#include <optional>

#include "csf/injections.hpp"

namespace csf {

// One h-coefficient of omega X_{G(f)}, recomputed three independent ways,
// together with the injection-check outcome.
struct MuRecord {
  Partition mu;
  std::string case_tag;  // "I".."IV", "bounce2", "trivial"
  Int c_via_signed_sum = 0;
  Int c_via_oracle = 0;
  Int c_via_matching = 0;
  std::vector<std::pair<std::string, Int>> set_sizes;
  InjectionChecks checks;
  std::vector<std::string> counterexamples;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct Certificate {
  std::vector<int> f;
  int n = 0;
  int bounce = 0;
  std::vector<MuRecord> records;
  std::vector<std::string> problems;  // function-level findings

  bool passed() const;
  nlohmann::json to_json() const;  // carries "schema": "csf-cert/1"
};

struct Summary {
  int n_max = 0;
  std::optional<int> bounce_filter;
  long long functions = 0;
  long long failures = 0;
  long long elapsed_ms = 0;
  std::vector<Certificate> certificates;  // enumeration order

  nlohmann::json to_json(bool include_certificates = true) const;
  std::string table() const;  // human-readable summary
};

// Maximum n accepted by verify_range: 8 unless the CSF_BUDGET environment
// variable raises (or lowers) it.
int configured_budget();

// Recomputes every c_mu (signed sum, coloring oracle, injection residual)
// and runs every injection check; failures are recorded in the
// certificate, never thrown.  Requires b(f) <= 3.
Certificate verify_function(const HessenbergFunction& f);

// Certifies every Hessenberg function with 1 <= n <= n_max (optionally
// filtered by bounce number), in parallel; deterministic output order.
Summary verify_range(int n_max, std::optional<int> bounce_filter = std::nullopt,
                     int threads = 0);

// True iff the coloring polynomial, the tableau-counting Schur route and
// the signed-sum e-route coincide as polynomials in n variables.
bool oracle_crosscheck(const HessenbergFunction& f);

}  // namespace csf
