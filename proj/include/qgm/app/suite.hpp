#pragma once

#include <string>
#include <vector>

#include "qgm/app/report.hpp"

namespace qgm::app {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  json detail = json::object();
  double timing_ms = 0.0;
};

/// Criteria 1-10, in order.
std::vector<CriterionResult> run_core_criteria(const RunConfig& cfg);
/// Criteria 1-11; 11 re-runs 1-10 and re-verifies the exact passes in float mode.
std::vector<CriterionResult> run_criteria(const RunConfig& cfg);

json criteria_json(const std::vector<CriterionResult>& results);

/// Aggregated report; library errors (e.g. CapExceeded) give status "error".
Report run_suite(const RunConfig& cfg);

/// Regular-representation dual models of small groups, with their uniformity
/// and certification data. Records only; asserts nothing.
Report run_experiment(const RunConfig& cfg);

}  // namespace qgm::app
