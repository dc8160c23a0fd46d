#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace sepmatch {

// One replayable failure row: the graph and what the check expected vs. saw.
struct ReportFailure {
  std::string graph6;
  std::string expected;
  std::string got;
};

struct ScanClass {
  std::string graph_class;
  int min_n = 0;
  int max_n = 0;
  bool connected_only = true;
};

struct VerificationReport {
  std::string theorem_id;
  ScanClass class_scanned;
  long graphs_checked = 0;
  std::vector<ReportFailure> failures;
  double runtime_ms = 0;
  std::string artifact_version;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  bool verified() const { return failures.empty(); }
  std::string status() const { return verified() ? "verified" : "failed"; }
};

const char* artifact_version();

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace sepmatch
