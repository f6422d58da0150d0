#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "entlab/evolution.hpp"
#include "entlab/sampling.hpp"

namespace entlab {

struct VerificationFailure {
  std::string point;
  double error = 0.0;
};

/// Aggregated outcome of one claim: pass iff max_abs_error <= tolerance and no
/// failure was recorded.
struct VerificationReport {
  std::string claim;
  long trials = 0;
  double max_abs_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  std::vector<VerificationFailure> failures;
};

/// Default seed used by the CLI and the randomized suites.
inline constexpr std::uint64_t kDefaultSeed = 42;

/// Claimed form-invariance pairings: families 1 and 2 under both H[1] and
/// H[2], families 3 and 4 under H[1], families 5 and 6 under H[2]. Everything
/// else raises UnsupportedPairingError.
bool pairing_supported(int family, GeneralForm form);

/// Draws `trials` random valid family points and random coefficients of the
/// form; at each grid time asserts that the evolved state still classifies
/// into the family (zero-pattern residual <= tol) and that the corrected
/// observable relation matches the oracle to tol.
VerificationReport verify_relation_over_time(int family, GeneralForm form, int trials,
                                             const TimeGrid& times, double tol,
                                             std::uint64_t seed);

enum class ConservationKind { PsiUnderH1, PhiUnderH2Symmetric };

/// Asserts |N(t) - N(0)| <= tol at every grid time for seeded random initial
/// angles and coefficients. PhiUnderH2Symmetric enforces h03 = h30.
VerificationReport verify_conservation(ConservationKind kind, int trials, const TimeGrid& times,
                                       double tol, std::uint64_t seed);

// Suites backing `verify --suite <name>`. Each returns one report per claim.
std::vector<VerificationReport> suite_closed_forms(int trials_per_family, double tol,
                                                   std::uint64_t seed);
std::vector<VerificationReport> suite_observable_relations(int trials_per_family, double tol,
                                                           std::uint64_t seed);
std::vector<VerificationReport> suite_invariance(int trials, double tol, std::uint64_t seed);
std::vector<VerificationReport> suite_conservation(int trials, double tol, std::uint64_t seed);

/// Figure surfaces: reference-curve match after (kappa, gamma) calibration,
/// pointwise corrected-relation vs oracle identity, and entanglement
/// generation from the separable mixtures. Calibrations are appended to
/// *calibrations (one per figure) when non-null.
std::vector<VerificationReport> suite_figures(int theta_steps, int time_steps, double reference_tol,
                                              double relation_tol,
                                              std::vector<FigureCalibration>* calibrations = nullptr);

std::vector<VerificationReport> suite_all(std::uint64_t seed);

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace entlab
