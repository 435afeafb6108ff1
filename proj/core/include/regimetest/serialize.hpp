#pragma once

#include <nlohmann/json.hpp>

#include "regimetest/testresult.hpp"

namespace regimetest {

using json = nlohmann::ordered_json;

json fitted_to_json(const FittedModel& fm);
json testresult_to_json(const TestResult& res);

/*
 * Self-contained run report: the resolved configuration plus seeds stored
 * next to the payload, so re-running with them reproduces the payload
 * bit-for-bit (timing is the one field excluded from that contract).
 */
struct RunReport {
  int schema_version = 1;
  std::string command;
  json config;
  std::uint64_t seed = 0;
  int workers = 1;
  double timing_sec = 0.0;
  std::vector<std::string> warnings;
  json result;
};

json report_to_json(const RunReport& report);

// Structural check against the shipped report schema (required keys and
// primitive types); throws validation_error on mismatch.
void validate_report(const json& report);

}  // namespace regimetest
