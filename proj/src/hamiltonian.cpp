#include "entlab/hamiltonian.hpp"

#include <cmath>

namespace entlab {
namespace {

double require(const std::optional<double>& p, const char* name) {
  if (!p.has_value()) throw MissingParameterError(name);
  if (!std::isfinite(*p)) throw Error(std::string("Hamiltonian parameter ") + name + " is not finite");
  return *p;
}

}  // namespace

Observable hamiltonian_from_coefficients(const HamiltonianCoefficients& c) {
  if (!c.h.allFinite()) throw Error("Hamiltonian coefficients must be finite");
  Matrix4 m = Matrix4::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (c.h(mu, nu) != 0.0) m += c.h(mu, nu) * kron(pauli(mu), pauli(nu));
    }
  }
  return Observable(m, "H");
}

std::string form_label(HamiltonianForm form) {
  switch (form) {
    case HamiltonianForm::H1: return "H[1]";
    case HamiltonianForm::H2: return "H[2]";
    case HamiltonianForm::H11: return "H[1,1]";
    case HamiltonianForm::H12: return "H[1,2]";
    case HamiltonianForm::H21: return "H[2,1]";
    case HamiltonianForm::H22: return "H[2,2]";
  }
  return "H[?]";
}

std::string form_label(GeneralForm form) {
  return form == GeneralForm::H1 ? "H[1]" : "H[2]";
}

HamiltonianCoefficients coefficients_of(const NamedHamiltonianForm& f) {
  const FormParameters& p = f.params;
  HamiltonianCoefficients c;
  switch (f.form) {
    case HamiltonianForm::H1: {
      c.h(3, 0) = require(p.h30, "h30");
      c.h(0, 3) = require(p.h03, "h03");
      const double f1 = require(p.f1, "f1");
      c.h(1, 2) = f1;
      c.h(2, 1) = -f1;
      const double g1 = require(p.g1, "g1");
      c.h(1, 1) = g1;
      c.h(2, 2) = g1;
      c.h(3, 3) = require(p.h33, "h33");
      break;
    }
    case HamiltonianForm::H2: {
      c.h(3, 0) = require(p.h30, "h30");
      c.h(0, 3) = require(p.h03, "h03");
      const double f2 = require(p.f2, "f2");
      c.h(1, 2) = f2;
      c.h(2, 1) = f2;
      const double g2 = require(p.g2, "g2");
      c.h(1, 1) = g2;
      c.h(2, 2) = -g2;
      c.h(3, 3) = require(p.h33, "h33");
      break;
    }
    case HamiltonianForm::H11: {
      const double w = 0.5 * require(p.omega1, "omega1");
      c.h(3, 0) = w;
      c.h(0, 3) = w;
      const double g1 = require(p.g1, "g1");
      c.h(1, 1) = g1;
      c.h(2, 2) = g1;
      c.h(3, 3) = require(p.h1, "h1");
      break;
    }
    case HamiltonianForm::H12: {
      const double w = 0.5 * require(p.omega2, "omega2");
      c.h(3, 0) = w;
      c.h(0, 3) = w;
      const double f1 = require(p.f1, "f1");
      c.h(1, 2) = f1;
      c.h(2, 1) = -f1;
      c.h(3, 3) = require(p.h1, "h1");
      break;
    }
    case HamiltonianForm::H21: {
      const double w = 0.5 * require(p.omega2, "omega2");
      c.h(3, 0) = w;
      c.h(0, 3) = -w;
      const double g2 = require(p.g2, "g2");
      c.h(1, 1) = g2;
      c.h(2, 2) = -g2;
      c.h(3, 3) = require(p.h2, "h2");
      break;
    }
    case HamiltonianForm::H22: {
      const double w = 0.5 * require(p.omega2, "omega2");
      c.h(3, 0) = w;
      c.h(0, 3) = -w;
      const double f2 = require(p.f2, "f2");
      c.h(1, 2) = f2;
      c.h(2, 1) = f2;
      c.h(3, 3) = require(p.h2, "h2");
      break;
    }
  }
  return c;
}

Observable named_hamiltonian(const NamedHamiltonianForm& f) {
  const Observable h = hamiltonian_from_coefficients(coefficients_of(f));
  return Observable(h.matrix(), form_label(f.form));
}

bool matches_form(const HamiltonianCoefficients& c, GeneralForm form, double tol) {
  // Entries outside {30, 03, 33, 12, 21, 11, 22} must vanish.
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const bool permitted = (mu == 3 && nu == 0) || (mu == 0 && nu == 3) ||
                             (mu == 3 && nu == 3) || (mu == 1 && nu == 2) ||
                             (mu == 2 && nu == 1) || (mu == 1 && nu == 1) ||
                             (mu == 2 && nu == 2);
      if (!permitted && std::abs(c.h(mu, nu)) > tol) return false;
    }
  }
  if (form == GeneralForm::H1) {
    return std::abs(c.h(1, 2) + c.h(2, 1)) <= tol && std::abs(c.h(1, 1) - c.h(2, 2)) <= tol;
  }
  return std::abs(c.h(1, 2) - c.h(2, 1)) <= tol && std::abs(c.h(1, 1) + c.h(2, 2)) <= tol;
}

}  // namespace entlab
