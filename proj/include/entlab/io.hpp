#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "entlab/evolution.hpp"
#include "entlab/report.hpp"
#include "entlab/verify.hpp"

namespace entlab {

/// Parsed state specification file: exactly one of a family point, a pure or
/// mixed initial state, or a raw 4x4 matrix given as 16 [re, im] pairs
/// (row-major).
struct StateSpec {
  std::variant<FamilyParams, PureInitialState, MixedInitialState, Matrix4> value;
};

/// Parses the JSON text. Unknown keys are errors, not warnings; parse errors
/// carry a line number. Throws ConfigError.
StateSpec parse_state_spec(const std::string& text);

/// Reads and parses the file; throws IoError when unreadable.
StateSpec load_state_spec(const std::string& path);

/// Builds (and validates) the density matrix the parsed spec describes.
DensityMatrix realize(const StateSpec& spec);

std::string describe(const StateSpec& spec);

/// Shortest round-trippable decimal rendering used in every CSV (17
/// significant digits).
std::string format_g17(double x);

/// Header: theta,time,T,Sz,S2,s11,s12,N_oracle,N_printed,N_corrected.
/// One row per grid point, theta-major then time.
void write_surface_csv(std::ostream& os, const std::vector<SurfaceSample>& samples);
std::string surface_csv_string(const std::vector<SurfaceSample>& samples);

/// Record rows followed by a '#'-prefixed summary of the documented issues.
void write_discrepancy_report(std::ostream& os, const DiscrepancyReport& report);
std::string discrepancy_summary(const DiscrepancyReport& report);

/// One line per claim: [PASS|FAIL] max_err=... tol=... trials=...  claim.
std::string verification_table(const std::vector<VerificationReport>& reports);

}  // namespace entlab
