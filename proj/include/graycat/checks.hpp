// SPDX-License-Identifier: Apache-2.0
//
// Registry of named verification checks and the property suite.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "graycat/error.hpp"

namespace graycat {

struct Config {
  int version = 1;
  int site_max_n = 2;
  int site_max_w = 2;
  Budget budget;

  /// Throws std::invalid_argument on malformed input or unknown keys.
  static Config from_json_text(const std::string& text);
  static Config load(const std::string& path);
  /// Canonical serialization; the hash is taken over this text.
  std::string to_json_text() const;
  std::uint64_t hash() const;
};

enum class Verdict { pass, fail, inconclusive };
const char* verdict_name(Verdict v);
/// 0, 1, 2.
int exit_code(Verdict v);

struct CheckReport {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::inconclusive;
  std::map<std::string, std::string> params;
  /// In the order produced, so reports are reproducible.
  std::vector<std::pair<std::string, std::string>> details;
  std::uint64_t config_hash = 0;
  double seconds = 0;
};

/// JSON text; timings are included only when asked for.
std::string report_json(const CheckReport& r, bool timings = false);
std::string report_text(const CheckReport& r, bool timings = false);

struct CheckInfo {
  std::string id;
  std::string statement;
  std::vector<std::string> params;  // accepted override keys
  bool can_falsify = false;
};

const std::vector<CheckInfo>& check_registry();

struct RunOptions {
  Config config;
  /// Replace the candidate by a deliberately wrong one (harness self-test).
  bool falsify = false;
};

/// Throws std::invalid_argument for unknown ids or parameters.
CheckReport run_check(const std::string& id,
                      const std::map<std::string, std::string>& params,
                      const RunOptions& opt = {});

struct Summary {
  std::vector<CheckReport> reports;  // registry order
  Verdict verdict() const;
};

/// `workers` <= 1 runs sequentially. `falsify_id` names at most one check to
/// run in falsify mode.
Summary run_all(const RunOptions& opt, int workers,
                const std::string& falsify_id = {});

/// GRAYCAT_WORKERS, or 1.
int workers_from_env();

struct PropertySuiteReport {
  int instances = 0;
  int violations = 0;
  std::vector<std::string> failures;
  bool pass() const { return violations == 0; }
};

/// Interchange and unit axioms, level consistency against grid maps,
/// companion uniqueness and closure, and pointwise colimit universality, on
/// every object the suite constructs.
PropertySuiteReport run_property_suite();

}  // namespace graycat
