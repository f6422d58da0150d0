#pragma once

#include <optional>
#include <string>

#include "entlab/spin.hpp"

namespace entlab {

/// Real expansion coefficients h(mu, nu) over the spin-tensor basis s_{mu nu}.
struct HamiltonianCoefficients {
  Eigen::Matrix4d h = Eigen::Matrix4d::Zero();
};

/// H = sum_{mu nu} h(mu, nu) s_{mu nu}; Hermitian by construction.
Observable hamiltonian_from_coefficients(const HamiltonianCoefficients& c);

/// The named Hamiltonian forms:
///   H[1]   = h30 s30 + h03 s03 + f1 (s12 - s21) + g1 (s11 + s22) + h33 s33
///   H[2]   = h30 s30 + h03 s03 + f2 (s12 + s21) + g2 (s11 - s22) + h33 s33
///   H[1,1] = omega1/2 (s30 + s03) + g1 (s11 + s22) + h1 s33
///   H[1,2] = omega2/2 (s30 + s03) + f1 (s12 - s21) + h1 s33
///   H[2,1] = omega2/2 (s30 - s03) + g2 (s11 - s22) + h2 s33
///   H[2,2] = omega2/2 (s30 - s03) + f2 (s12 + s21) + h2 s33
enum class HamiltonianForm { H1, H2, H11, H12, H21, H22 };

std::string form_label(HamiltonianForm form);

/// Parameter record; only the fields the chosen form uses are read.
struct FormParameters {
  std::optional<double> h30, h03, h33;
  std::optional<double> f1, g1, f2, g2;
  std::optional<double> omega1, omega2, h1, h2;
};

struct NamedHamiltonianForm {
  HamiltonianForm form = HamiltonianForm::H1;
  FormParameters params;
};

/// Coefficient table of a named form. Throws MissingParameterError naming the
/// absent field.
HamiltonianCoefficients coefficients_of(const NamedHamiltonianForm& f);

Observable named_hamiltonian(const NamedHamiltonianForm& f);

/// The two general form classes whose zero pattern the invariance claims are
/// about.
enum class GeneralForm { H1, H2 };

std::string form_label(GeneralForm form);

/// True iff the only nonzero entries of `c` are those the form permits:
/// h30, h03, h33 freely, plus h12 = -h21 and h11 = h22 for H[1], or
/// h12 = +h21 and h11 = -h22 for H[2] (equalities to tol). Near-misses are
/// rejected, not coerced.
bool matches_form(const HamiltonianCoefficients& c, GeneralForm form, double tol = 1e-12);

}  // namespace entlab
