#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace uforge {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus status);
CheckStatus check_status_from_string(const std::string& text);

// One verification check. A check passes exactly when the expected and
// computed renderings are identical strings; values are rendered with exact
// integers, never rounded.
struct CheckResult {
  std::string id;
  std::string anchor;
  std::string expected;
  std::string computed;
  // closed-form | enumeration | cross-check | known-value | diagnostic
  std::string provenance;
  CheckStatus status = CheckStatus::fail;
  long long ms = 0;

  bool operator==(const CheckResult& other) const = default;
};

// Bounds for a verification run. Brute-force paths stay within small fields
// and small groups; everything outside is rejected up front.
struct RunConfig {
  int p = 2;
  int m = 1;
  unsigned long long max_order = 32;
  int parallel = 1;
  bool long_checks = false;
  std::string format = "table";

  // ConfigError when p is not 2 or 3, m is not 1 or 2, max_order exceeds 32,
  // parallel is outside [1, 64], or format is unknown
  void validate() const;

  bool operator==(const RunConfig& other) const = default;
};

struct SuiteReport {
  std::string suite;
  RunConfig config;
  std::vector<CheckResult> checks;

  // true when no check failed; skipped checks do not count against a run
  bool all_passed() const;
  std::size_t count(CheckStatus status) const;

  bool operator==(const SuiteReport& other) const = default;
};

// Builds a pass or fail record by comparing the two renderings.
CheckResult make_check(std::string id, std::string anchor, std::string expected,
                       std::string computed, std::string provenance,
                       long long ms = 0);

// Builds a skip record; the reason lands in the computed field.
CheckResult make_skip(std::string id, std::string anchor, std::string expected,
                      std::string reason, std::string provenance);

// Serialization keyed as {suite, config, checks:[{id, anchor, expected,
// computed, provenance, status, ms}]}; the field names are a compatibility
// contract. Parsing rejects malformed input with ConfigError and otherwise
// round-trips losslessly.
std::string to_json_string(const SuiteReport& report, int indent = 2);
SuiteReport suite_report_from_json(const std::string& text);

std::string render_table(const SuiteReport& report);

}  // namespace uforge
