#include "entlab/entanglement.hpp"

#include <cmath>

namespace entlab {
namespace {

// Radicands may dip a hair below zero from roundoff; anything further negative
// in an as-printed formula is a genuine domain violation and must surface.
double checked_sqrt(double radicand, const char* what) {
  if (radicand < -1e-12) {
    throw FormulaDomainError(std::string(what) + ": square root of a negative argument");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

void check_family_id(int family) {
  if (family < 1 || family > 6) {
    throw Error("family id must be in 1..6, got " + std::to_string(family));
  }
}

void check_finite(const ObservableVector& o, const char* what) {
  if (!std::isfinite(o.s11) || !std::isfinite(o.s12) || !std::isfinite(o.sz) ||
      !std::isfinite(o.s2)) {
    throw Error(std::string(what) + ": observable vector has non-finite entries");
  }
}

}  // namespace

ObservableVector observable_vector(const DensityMatrix& rho) {
  static const Observable s11 = spin_tensor(1, 1);
  static const Observable s12 = spin_tensor(1, 2);
  static const Observable sz = total_spin_z();
  static const Observable s2 = total_spin_squared();
  ObservableVector o{expectation(s11, rho), expectation(s12, rho), expectation(sz, rho),
                     expectation(s2, rho)};
  constexpr double slack = 1e-9;
  if (o.sz < -1.0 - slack || o.sz > 1.0 + slack || o.s2 < -slack || o.s2 > 2.0 + slack) {
    throw Error("observable vector outside physical ranges");
  }
  return o;
}

Matrix4 partial_transpose(const Matrix4& m) {
  Matrix4 out;
  for (int a = 0; a < 2; ++a)
    for (int c = 0; c < 2; ++c)
      out.block<2, 2>(2 * a, 2 * c) = m.block<2, 2>(2 * a, 2 * c).transpose();
  return out;
}

Matrix4 partial_transpose(const DensityMatrix& rho) { return partial_transpose(rho.matrix()); }

double negativity_oracle(const DensityMatrix& rho) {
  const EigenDecomposition eig = hermitian_eigen(partial_transpose(rho.matrix()));
  double n = 0.0;
  for (int k = 0; k < 4; ++k) n += std::max(0.0, -eig.eigenvalues(k));
  return n;
}

double family_negativity(const FamilyParams& p, FormulaVariant variant) {
  check_family_id(p.family);
  if (p.family <= 2) {
    return variant == FormulaVariant::AsPrinted ? std::abs(p.v) : p.v;
  }
  // x is the diagonal weight bridged against a zero by the partial transpose:
  // d3, a4, c5, b6.
  const double x = p.family == 3 ? p.diag2 : p.diag1;
  if (variant == FormulaVariant::AsPrinted) {
    return std::sqrt(x * x + p.v * p.v) - x;
  }
  return 0.5 * (std::sqrt(x * x + 4.0 * p.v * p.v) - x);
}

double observable_negativity(int family, const ObservableVector& obs, FormulaVariant variant) {
  check_family_id(family);
  check_finite(obs, "observable_negativity");
  const double planar = obs.s11 * obs.s11 + obs.s12 * obs.s12;
  if (variant == FormulaVariant::AsPrinted) {
    switch (family) {
      case 1:
      case 2:
        return 0.5 * std::sqrt(planar);
      case 3:
        return 0.5 * std::sqrt(planar + obs.sz * obs.sz) + obs.sz;
      case 4:
        return 0.5 * std::sqrt(planar + obs.sz * obs.sz) - obs.sz;
      default: {
        const double gap = 2.0 - obs.s2;
        return 0.5 * std::sqrt(planar + gap * gap) + obs.s2 - 2.0;
      }
    }
  }
  double x = 0.0;
  switch (family) {
    case 1:
    case 2: x = 0.0; break;
    case 3: x = -obs.sz; break;
    case 4: x = obs.sz; break;
    default: x = 2.0 - obs.s2; break;
  }
  return 0.5 * (std::sqrt(planar + x * x) - x);
}

double scenario_negativity(ScenarioKind kind, const ObservableVector& obs,
                           const ObservableVector& obs0, FormulaVariant variant) {
  check_finite(obs, "scenario_negativity");
  const bool printed = variant == FormulaVariant::AsPrinted;
  switch (kind) {
    case ScenarioKind::Psi:
      if (printed) return 0.5 * checked_sqrt(1.0 - obs.sz, "N_psi as printed");
      // On the psi manifold <s11>^2 + <s12>^2 = 1 - <Sz>^2, but the planar
      // route stays well conditioned where |<Sz>| approaches 1 (evaluating
      // 1 - <Sz>^2 there turns 1e-16 noise into 1e-8 of negativity).
      return observable_negativity(1, obs, FormulaVariant::Corrected);
    case ScenarioKind::Phi:
    case ScenarioKind::M2:
      // The printed form sqrt((<S^2>-1)^2) is already exact.
      return 0.5 * std::abs(obs.s2 - 1.0);
    case ScenarioKind::M1: {
      check_finite(obs0, "scenario_negativity (time zero)");
      const double radicand = obs0.sz * obs0.sz - obs.sz * obs.sz;
      return 0.5 * checked_sqrt(radicand, "N_M1");
    }
    case ScenarioKind::M34: {
      if (printed) {
        const double q = obs.s2 + obs.sz - 1.0;
        return std::sqrt(obs.sz * obs.sz + q * q) + obs.sz;
      }
      return observable_negativity(3, obs, FormulaVariant::Corrected);
    }
    case ScenarioKind::M56: {
      if (printed) {
        const double q = obs.s2 - obs.sz - 1.0;
        return std::sqrt(obs.sz * obs.sz + q * q) - obs.sz;
      }
      return observable_negativity(4, obs, FormulaVariant::Corrected);
    }
    case ScenarioKind::M3456H2x: {
      if (printed) {
        const double gap = 2.0 - obs.s2;
        const double mid = obs.s2 - 1.0;
        const double radicand = gap * gap + mid * mid - obs.sz * obs.sz;
        return checked_sqrt(radicand, "N_M(k) as printed") + obs.s2 - 2.0;
      }
      return observable_negativity(5, obs, FormulaVariant::Corrected);
    }
  }
  throw Error("scenario_negativity: unknown scenario kind");
}

DiscrepancyRecord discrepancy(const std::string& context, const FamilyParams& p) {
  DiscrepancyRecord r;
  r.context = context;
  r.printed_value = family_negativity(p, FormulaVariant::AsPrinted);
  r.corrected_value = family_negativity(p, FormulaVariant::Corrected);
  r.oracle_value = negativity_oracle(build_family(p));
  r.abs_deviation_printed = std::abs(r.printed_value - r.oracle_value);
  return r;
}

}  // namespace entlab
