// Runs every acceptance criterion with the default configuration and prints
// one PASS/FAIL line per criterion. REPNORM_ACCEPTANCE_REPORT names the JSON
// report file.
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "repnorm/acceptance.hpp"
#include "repnorm/errors.hpp"

int main() {
  using namespace repnorm;
  try {
    ExperimentConfig cfg;
    bool all = true;
    const auto records = run_acceptance(cfg, [&](const ReportRecord& r) {
      std::printf("[%s] criterion %s (%ld ms): %s | expected: %s | tolerance: %s\n", r.pass ? "PASS" : "FAIL",
                  r.criterion_id.c_str(), r.runtime_ms, r.observed.c_str(), r.expected.c_str(), r.tolerance.c_str());
      std::fflush(stdout);
      all = all && r.pass;
    });
    if (const char* path = std::getenv("REPNORM_ACCEPTANCE_REPORT")) {
      std::ofstream out(path, std::ios::binary);
      out << report_json(records);
    }
    std::printf("%zu criteria, %s\n", records.size(), all ? "all passed" : "FAILURES");
    return all ? 0 : 1;
  } catch (const Error& e) {
    std::fprintf(stderr, "acceptance: %s error: %s\n", error_kind_name(e.kind()), e.what());
    return 2;
  }
}
