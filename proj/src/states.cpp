#include "entlab/states.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace entlab {
namespace {

// Slack absorbing representation roundoff in parameter checks; genuine
// violations are orders of magnitude larger.
constexpr double kWeightSlack = 1e-12;

struct FamilyLayout {
  // Diagonal slots (0-based) of diag1/diag2; -1 when the family has no diag2.
  int diag1_slot;
  int diag2_slot;
  // Slot of the complement weight 1 - (sum of named weights).
  int complement_slot;
  // Upper coherence position.
  int coh_row;
  int coh_col;
};

// Families 1..6 in the |00>,|01>,|10>,|11> ordering.
constexpr std::array<FamilyLayout, 6> kLayout = {{
    {0, -1, 3, 0, 3},  // 1: diag(a1, 0, 0, 1-a1),          coherence (0,3)
    {1, -1, 2, 1, 2},  // 2: diag(0, b2, 1-b2, 0),          coherence (1,2)
    {2, 3, 1, 1, 2},   // 3: diag(0, 1-c3-d3, c3, d3),      coherence (1,2)
    {0, 1, 2, 1, 2},   // 4: diag(a4, b4, 1-a4-b4, 0),      coherence (1,2)
    {2, 3, 0, 0, 3},   // 5: diag(1-c5-d5, 0, c5, d5),      coherence (0,3)
    {1, 3, 0, 0, 3},   // 6: diag(1-b6-d6, b6, 0, d6),      coherence (0,3)
}};

void check_family_id(int family) {
  if (family < 1 || family > 6) {
    throw Error("family id must be in 1..6, got " + std::to_string(family));
  }
}

void check_weight(double w, const std::string& name) {
  if (!std::isfinite(w) || w < -kWeightSlack || w > 1.0 + kWeightSlack) {
    std::ostringstream os;
    os << "weight " << name << " = " << w << " outside [0,1]";
    throw InvalidWeightsError(os.str());
  }
}

}  // namespace

DensityMatrix::DensityMatrix(const Matrix4& m, double tol) {
  if (!is_hermitian(m, tol)) {
    throw NotHermitianError("density matrix is not Hermitian");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > tol) {
    throw TraceNotOneError("density matrix trace differs from 1");
  }
  const EigenDecomposition eig = hermitian_eigen(0.5 * (m + m.adjoint()));
  if (eig.eigenvalues.minCoeff() < -tol) {
    throw NotPositiveError("density matrix has a negative eigenvalue");
  }
  m_ = m;
}

DensityMatrix validate_density_matrix(const Matrix4& m, double tol) {
  return DensityMatrix(m, tol);
}

std::pair<const char*, const char*> family_diag_names(int family) {
  check_family_id(family);
  switch (family) {
    case 1: return {"a", nullptr};
    case 2: return {"b", nullptr};
    case 3: return {"c", "d"};
    case 4: return {"a", "b"};
    case 5: return {"c", "d"};
    default: return {"b", "d"};
  }
}

DensityMatrix build_family(const FamilyParams& p) {
  check_family_id(p.family);
  const FamilyLayout& lay = kLayout[static_cast<std::size_t>(p.family - 1)];
  const auto names = family_diag_names(p.family);

  check_weight(p.diag1, names.first);
  double named_sum = p.diag1;
  if (lay.diag2_slot >= 0) {
    check_weight(p.diag2, names.second);
    named_sum += p.diag2;
  }
  const double complement = 1.0 - named_sum;
  check_weight(complement, "1 - (named weights)");
  if (!std::isfinite(p.v) || p.v < 0.0) {
    throw InvalidWeightsError("coherence magnitude v must be non-negative");
  }
  if (!std::isfinite(p.alpha)) {
    throw InvalidWeightsError("phase alpha must be finite");
  }

  Matrix4 m = Matrix4::Zero();
  m(lay.diag1_slot, lay.diag1_slot) = p.diag1;
  if (lay.diag2_slot >= 0) m(lay.diag2_slot, lay.diag2_slot) = p.diag2;
  m(lay.complement_slot, lay.complement_slot) = complement;

  const double bridge = m(lay.coh_row, lay.coh_row).real() * m(lay.coh_col, lay.coh_col).real();
  if (p.v * p.v > bridge + kWeightSlack) {
    std::ostringstream os;
    os << "v^2 = " << p.v * p.v << " exceeds the bridged diagonal product " << bridge;
    throw PositivityViolationError(os.str());
  }

  const Complex coh = std::polar(p.v, -p.alpha);
  m(lay.coh_row, lay.coh_col) = coh;
  m(lay.coh_col, lay.coh_row) = std::conj(coh);
  return DensityMatrix(m);
}

double family_pattern_residual(const DensityMatrix& rho, int family) {
  check_family_id(family);
  const Matrix4& m = rho.matrix();
  const FamilyLayout& lay = kLayout[static_cast<std::size_t>(family - 1)];
  double residual = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const bool allowed = (r == c && (r == lay.diag1_slot || r == lay.diag2_slot ||
                                       r == lay.complement_slot)) ||
                           (r == lay.coh_row && c == lay.coh_col) ||
                           (r == lay.coh_col && c == lay.coh_row);
      if (!allowed) residual = std::max(residual, std::abs(m(r, c)));
    }
  }
  return residual;
}

std::vector<FamilyParams> classify_family(const DensityMatrix& rho, double tol) {
  if (!(tol > 0.0)) throw Error("classify_family: tol must be positive");
  const Matrix4& m = rho.matrix();
  std::vector<FamilyParams> matches;
  for (int family = 1; family <= 6; ++family) {
    const FamilyLayout& lay = kLayout[static_cast<std::size_t>(family - 1)];
    if (family_pattern_residual(rho, family) > tol) continue;

    FamilyParams p;
    p.family = family;
    p.diag1 = m(lay.diag1_slot, lay.diag1_slot).real();
    p.diag2 = lay.diag2_slot >= 0 ? m(lay.diag2_slot, lay.diag2_slot).real() : 0.0;
    const Complex coh = m(lay.coh_row, lay.coh_col);
    p.v = std::abs(coh);
    p.alpha = p.v <= tol ? 0.0 : -std::arg(coh);
    matches.push_back(p);
  }
  return matches;
}

bool classifies_into(const DensityMatrix& rho, int family, double tol) {
  check_family_id(family);
  for (const FamilyParams& p : classify_family(rho, tol)) {
    if (p.family == family) return true;
  }
  return false;
}

DensityMatrix pure_initial(const PureInitialState& s) {
  Vector4c ket = Vector4c::Zero();
  switch (s.kind) {
    case PureInitialState::Kind::Psi:
      ket(0) = std::sin(s.theta);
      ket(3) = std::polar(std::cos(s.theta), -s.alpha);
      break;
    case PureInitialState::Kind::PhiPlus:
      ket(1) = std::sin(s.theta);
      ket(2) = std::cos(s.theta);
      break;
    case PureInitialState::Kind::PhiMinus:
      ket(1) = std::sin(s.theta);
      ket(2) = -std::cos(s.theta);
      break;
  }
  return DensityMatrix(ket * ket.adjoint());
}

DensityMatrix mixed_initial(const MixedInitialState& s) {
  if (s.kind < 1 || s.kind > 6) {
    throw Error("mixed initial state kind must be in 1..6");
  }
  const double sn = std::sin(s.theta), cs = std::cos(s.theta);
  const double s2 = sn * sn, c2 = cs * cs;
  Vector4 diag = Vector4::Zero();
  switch (s.kind) {
    case 1: diag << s2, 0, 0, c2; break;
    case 2: diag << 0, s2, c2, 0; break;
    case 3: diag << 0, 0, s2, c2; break;
    case 4: diag << 0, s2, 0, c2; break;
    case 5: diag << s2, 0, c2, 0; break;
    case 6: diag << s2, c2, 0, 0; break;
  }
  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) m(i, i) = diag(i);
  return DensityMatrix(m);
}

}  // namespace entlab
