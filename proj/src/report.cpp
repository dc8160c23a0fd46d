#include "sepmatch/report.hpp"

namespace sepmatch {

const char* artifact_version() { return "0.1.0"; }

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"graph6", f.graph6}, {"expected", f.expected}, {"got", f.got}});
  }
  return {
      {"theorem_id", report.theorem_id},
      {"class_scanned",
       {{"class", report.class_scanned.graph_class},
        {"min_n", report.class_scanned.min_n},
        {"max_n", report.class_scanned.max_n},
        {"connected_only", report.class_scanned.connected_only}}},
      {"graphs_checked", report.graphs_checked},
      {"failures", std::move(failures)},
      {"runtime_ms", report.runtime_ms},
      {"artifact_version", report.artifact_version},
      {"status", report.status()},
      {"details", report.details},
  };
}

}  // namespace sepmatch
