#pragma once

#include <string>

#include "entlab/linalg.hpp"
#include "entlab/states.hpp"

namespace entlab {

/// Index into the single-qubit operator basis sigma_0..sigma_3.
class PauliIndex {
 public:
  explicit PauliIndex(int value) : value_(value) {
    if (value < 0 || value > 3) {
      throw Error("Pauli index must be in 0..3, got " + std::to_string(value));
    }
  }
  int value() const { return value_; }

 private:
  int value_;
};

/// sigma_0 (identity) and the Pauli matrices sigma_1, sigma_2, sigma_3.
const Matrix2& pauli(PauliIndex mu);
inline const Matrix2& pauli(int mu) { return pauli(PauliIndex(mu)); }

/// A labelled Hermitian two-qubit operator.
class Observable {
 public:
  Observable(const Matrix4& matrix, std::string label, double tol = 1e-12);

  const Matrix4& matrix() const { return m_; }
  const std::string& label() const { return label_; }

 private:
  Matrix4 m_;
  std::string label_;
};

/// s_{mu nu} = sigma_mu (x) sigma_nu, labelled "s_{mu nu}".
Observable spin_tensor(PauliIndex mu, PauliIndex nu);
inline Observable spin_tensor(int mu, int nu) { return spin_tensor(PauliIndex(mu), PauliIndex(nu)); }

/// S_z = (s_30 + s_03)/2 = diag(1, 0, 0, -1).
Observable total_spin_z();

/// S^2 = sum_i S_i S_i with S_i = (s_i0 + s_0i)/2; eigenvalues {0, 2, 2, 2}.
Observable total_spin_squared();

/// Tr(O rho). The imaginary part of the trace must not exceed 1e-12
/// (NonRealExpectationError otherwise -- it signals a corrupted input).
double expectation(const Observable& o, const DensityMatrix& rho);

}  // namespace entlab
