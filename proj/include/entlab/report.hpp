#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entlab/entanglement.hpp"

namespace entlab {

/// One documented inconsistency of the as-printed relations, together with the
/// maximum deviation observed in the sampled records (0 for purely structural
/// flags).
struct DocumentedIssue {
  std::string id;
  std::string description;
  double max_abs_deviation = 0.0;
};

struct DiscrepancyReport {
  std::uint64_t seed = 0;
  int samples_per_family = 0;
  std::vector<DiscrepancyRecord> records;
  std::vector<DocumentedIssue> issues;
};

/// Samples every formula in both variants against the oracle and aggregates
/// the documented as-printed inconsistencies. Deterministic at fixed seed.
DiscrepancyReport build_discrepancy_report(std::uint64_t seed, int samples_per_family);

}  // namespace entlab
