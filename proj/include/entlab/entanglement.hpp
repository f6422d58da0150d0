#pragma once

#include <string>

#include "entlab/spin.hpp"
#include "entlab/states.hpp"

namespace entlab {

/// The negativity formulas exist in two first-class variants: exactly as
/// printed in the source relations, and corrected to agree with the
/// partial-transpose oracle.
enum class FormulaVariant { AsPrinted, Corrected };

/// Expectation values <s_11>, <s_12>, <S_z>, <S^2> of one state.
struct ObservableVector {
  double s11 = 0.0;
  double s12 = 0.0;
  double sz = 0.0;
  double s2 = 0.0;
};

/// Measures the four expectation values; enforces the physical ranges
/// sz in [-1, 1] and s2 in [0, 2] up to 1e-9 slack.
ObservableVector observable_vector(const DensityMatrix& rho);

/// Transpose on the second qubit: ((a,b),(c,d)) -> ((a,d),(c,b)). Preserves
/// Hermiticity and trace, not positivity. An involution.
Matrix4 partial_transpose(const Matrix4& m);
Matrix4 partial_transpose(const DensityMatrix& rho);

/// N(rho) = sum_k |min(lambda_k(rho^T2), 0)|. In [0, 1/2]; zero iff the state
/// is PPT, which for two qubits means separable. This is the independent
/// reference every closed-form and observable-based formula is checked
/// against.
double negativity_oracle(const DensityMatrix& rho);

/// Closed-form family negativity.
/// AsPrinted: N1 = |v|, N2 = |v|, N3 = sqrt(d3^2+v^2)-d3, N4 = sqrt(a4^2+v^2)-a4,
///            N5 = sqrt(c5^2+v^2)-c5, N6 = sqrt(b6^2+v^2)-b6.
/// Corrected: N1 = N2 = v and N = (sqrt(x^2+4v^2)-x)/2 for families 3..6 with
///            x = d3, a4, c5, b6 respectively (matches the oracle exactly).
double family_negativity(const FamilyParams& p, FormulaVariant variant);

/// Observable-based family negativity.
/// AsPrinted evaluates the printed relations literally, e.g. family 3:
///   1/2 sqrt(<s11>^2+<s12>^2+<Sz>^2) + <Sz>.
/// Corrected evaluates the unified oracle-consistent relation
///   N = 1/2 (sqrt(<s11>^2+<s12>^2+X^2) - X)
/// with X = 0 (families 1,2), X = -<Sz> (3), X = +<Sz> (4), X = 2-<S^2> (5,6).
double observable_negativity(int family, const ObservableVector& obs, FormulaVariant variant);

/// Time-evolution scenarios with their own displayed negativity relations.
enum class ScenarioKind { Psi, Phi, M1, M2, M34, M56, M3456H2x };

/// AsPrinted evaluates the displayed scenario formulas literally, including
/// N_psi = 1/2 sqrt(1 - <Sz>). Corrected evaluates N_phi = 1/2 |<S^2> - 1|,
/// N_M1 = 1/2 sqrt(<Sz>(0)^2 - <Sz>(t)^2), and for Psi / M34 / M56 / M3456H2x
/// the family-1/3/4/5 corrected observable relation. (For Psi that relation
/// equals the square-completed 1/2 sqrt(1 - <Sz>^2) on the scenario manifold
/// while staying well conditioned near |<Sz>| = 1.)
/// obs0 is read only by kinds needing time-zero values (M1). A genuinely
/// negative radicand in the AsPrinted path throws FormulaDomainError
/// (reported, not clamped).
double scenario_negativity(ScenarioKind kind, const ObservableVector& obs,
                           const ObservableVector& obs0, FormulaVariant variant);

/// One (formula, parameter point) comparison of both variants against the
/// oracle.
struct DiscrepancyRecord {
  std::string context;
  double printed_value = 0.0;
  double corrected_value = 0.0;
  double oracle_value = 0.0;
  double abs_deviation_printed = 0.0;
};

/// Evaluates both closed-form variants and the oracle at the family point.
DiscrepancyRecord discrepancy(const std::string& context, const FamilyParams& p);

}  // namespace entlab
