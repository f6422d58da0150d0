#include "entlab/spin.hpp"

#include <array>
#include <cmath>

namespace entlab {

const Matrix2& pauli(PauliIndex mu) {
  static const std::array<Matrix2, 4> sigma = [] {
    std::array<Matrix2, 4> s;
    const Complex i(0.0, 1.0);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma[static_cast<std::size_t>(mu.value())];
}

Observable::Observable(const Matrix4& matrix, std::string label, double tol)
    : m_(matrix), label_(std::move(label)) {
  if (!is_hermitian(m_, tol)) {
    throw NotHermitianError("observable '" + label_ + "' is not Hermitian");
  }
}

Observable spin_tensor(PauliIndex mu, PauliIndex nu) {
  const Matrix4 m = kron(pauli(mu), pauli(nu));
  return Observable(m, "s_{" + std::to_string(mu.value()) + std::to_string(nu.value()) + "}");
}

Observable total_spin_z() {
  const Matrix4 m = 0.5 * (kron(pauli(3), pauli(0)) + kron(pauli(0), pauli(3)));
  return Observable(m, "S_z");
}

Observable total_spin_squared() {
  Matrix4 sum = Matrix4::Zero();
  for (int i = 1; i <= 3; ++i) {
    const Matrix4 si = 0.5 * (kron(pauli(i), pauli(0)) + kron(pauli(0), pauli(i)));
    sum += si * si;
  }
  return Observable(sum, "S^2");
}

double expectation(const Observable& o, const DensityMatrix& rho) {
  const Complex tr = (o.matrix() * rho.matrix()).trace();
  if (std::abs(tr.imag()) > 1e-12) {
    throw NonRealExpectationError("expectation of '" + o.label() +
                                  "' has a non-real trace; input is corrupted");
  }
  return tr.real();
}

}  // namespace entlab
