#pragma once

#include <string>
#include <vector>

#include "entlab/linalg.hpp"

namespace entlab {

/// Validated two-qubit state: Hermitian, unit trace, positive semidefinite.
/// Basis ordering is |00>, |01>, |10>, |11> throughout.
class DensityMatrix {
 public:
  /// Throws NotHermitianError / TraceNotOneError / NotPositiveError, naming the
  /// first violated invariant.
  explicit DensityMatrix(const Matrix4& m, double tol = 1e-12);

  const Matrix4& matrix() const { return m_; }

 private:
  Matrix4 m_;
};

DensityMatrix validate_density_matrix(const Matrix4& m, double tol = 1e-12);

/// Parameters of one of the six structured state families.
///
/// diag1/diag2 hold the family-specific diagonal weights:
///   family 1: diag1 = a1                family 2: diag1 = b2
///   family 3: diag1 = c3, diag2 = d3    family 4: diag1 = a4, diag2 = b4
///   family 5: diag1 = c5, diag2 = d5    family 6: diag1 = b6, diag2 = d6
/// v >= 0 is the coherence magnitude and alpha its phase: the upper coherence
/// entry is exp(-i*alpha)*v.
struct FamilyParams {
  int family = 1;
  double diag1 = 0.0;
  double diag2 = 0.0;
  double v = 0.0;
  double alpha = 0.0;
};

inline FamilyParams family1(double a, double v, double alpha = 0.0) { return {1, a, 0.0, v, alpha}; }
inline FamilyParams family2(double b, double v, double alpha = 0.0) { return {2, b, 0.0, v, alpha}; }
inline FamilyParams family3(double c, double d, double v, double alpha = 0.0) { return {3, c, d, v, alpha}; }
inline FamilyParams family4(double a, double b, double v, double alpha = 0.0) { return {4, a, b, v, alpha}; }
inline FamilyParams family5(double c, double d, double v, double alpha = 0.0) { return {5, c, d, v, alpha}; }
inline FamilyParams family6(double b, double d, double v, double alpha = 0.0) { return {6, b, d, v, alpha}; }

/// Names of the two diagonal parameters ("a", "b", ...); second is nullptr for
/// families 1 and 2.
std::pair<const char*, const char*> family_diag_names(int family);

/// Builds the family state. Throws InvalidWeightsError when a diagonal weight
/// (or its complement) leaves [0,1] or v < 0, and PositivityViolationError
/// when v^2 exceeds the product of the two diagonal entries the coherence
/// bridges.
DensityMatrix build_family(const FamilyParams& p);

/// Every family whose zero pattern `rho` matches within tol (entries required
/// to be zero have magnitude <= tol), with parameters read off the matrix.
/// v is the off-diagonal magnitude and alpha its negated phase (alpha = 0 when
/// v <= tol). The empty vector is a valid answer; the families overlap, so
/// several matches are common.
std::vector<FamilyParams> classify_family(const DensityMatrix& rho, double tol);

bool classifies_into(const DensityMatrix& rho, int family, double tol);

/// Largest magnitude among the entries the family pattern requires to vanish;
/// the state matches the family iff this residual is <= tol.
double family_pattern_residual(const DensityMatrix& rho, int family);

/// |psi> = sin(theta)|00> + exp(-i*alpha) cos(theta)|11>        (Psi)
/// |phi> = sin(theta)|01> +- cos(theta)|10>                     (PhiPlus/PhiMinus)
/// alpha is read for Psi only; PhiPlus fixes it to 0 and PhiMinus to pi.
struct PureInitialState {
  enum class Kind { Psi, PhiPlus, PhiMinus };
  Kind kind = Kind::Psi;
  double theta = 0.0;
  double alpha = 0.0;
};

DensityMatrix pure_initial(const PureInitialState& s);

/// The six diagonal (hence separable) initial mixtures, parametrized by theta.
/// Kind 6 as printed in the source relations is not Hermitian; the implemented
/// state is sin^2(theta)|00><00| + cos^2(theta)|01><01|, the unique diagonal
/// state consistent with the family-6 zero pattern.
struct MixedInitialState {
  int kind = 1;  // 1..6
  double theta = 0.0;
};

DensityMatrix mixed_initial(const MixedInitialState& s);

}  // namespace entlab
