#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sepmatch/graph.hpp"
#include "sepmatch/report.hpp"

namespace sepmatch {

// thm1, thm2 (alias thm-moshi), thm3, thm4, thm5, thm6, conj-funk, oracle.
const std::vector<std::string>& known_theorem_ids();

// Scan bound used when the caller passes max_n < 0.
int default_max_n(const std::string& theorem_id);

struct VerifyOptions {
  int max_n = -1;
  int workers = 1;
  std::uint64_t seed = 1;  // random instances of the oracle check
};

// Exhaustive scan of the theorem's hypothesis class. Throws
// PreconditionError("unknown_theorem") or ("bound_exceeded").
VerificationReport run_verify(const std::string& theorem_id, const VerifyOptions& options = {});

// Runs `check` over `graphs` on up to `workers` threads and returns the
// failure rows in input order.
std::vector<ReportFailure> parallel_check(
    const std::vector<Graph>& graphs, int workers,
    const std::function<std::vector<ReportFailure>(const Graph&)>& check);

}  // namespace sepmatch
