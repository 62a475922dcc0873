#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "repnorm/experiments.hpp"

namespace repnorm {

struct ReportRecord {
  std::string criterion_id;
  std::string expected;
  std::string observed;
  std::string tolerance;
  bool pass = false;
  long runtime_ms = 0;
};

// Default tolerance per name; config tolerances override these and unknown
// names are rejected with ConfigError.
const std::map<std::string, double>& default_tolerances();

std::vector<std::string> criterion_ids();

// Runs the selected criteria (cfg.criteria, or all) in order. on_record is
// called after each criterion finishes.
std::vector<ReportRecord> run_acceptance(const ExperimentConfig& cfg,
                                         const std::function<void(const ReportRecord&)>& on_record = {});

std::string report_json(const std::vector<ReportRecord>& records);

}  // namespace repnorm
