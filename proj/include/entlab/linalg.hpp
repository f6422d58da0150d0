#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "entlab/errors.hpp"

namespace entlab {

using Complex = std::complex<double>;

/// Dense complex matrix types, templated on the real scalar.
template <typename Real>
using Matrix2Of = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <typename Real>
using Matrix4Of = Eigen::Matrix<std::complex<Real>, 4, 4>;
template <typename Real>
using Vector4Of = Eigen::Matrix<std::complex<Real>, 4, 1>;

using Matrix2 = Matrix2Of<double>;
using Matrix4 = Matrix4Of<double>;
using Vector4c = Vector4Of<double>;
using Vector4 = Eigen::Vector4d;

template <typename Derived>
bool is_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// max |M - M^dagger| entrywise <= tol. Non-finite matrices are never Hermitian.
template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = 1e-12) {
  if (!m.allFinite()) return false;
  return ((m - m.adjoint()).cwiseAbs().maxCoeff() <= tol);
}

/// max |M^dagger M - I| entrywise <= tol.
template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = 1e-12) {
  using Plain = typename Derived::PlainObject;
  if (!m.allFinite()) return false;
  return ((m.adjoint() * m - Plain::Identity()).cwiseAbs().maxCoeff() <= tol);
}

/// Kronecker product of fixed-size dense matrices:
/// (kron(a, b))(i*Rb + k, j*Cb + l) = a(i, j) * b(k, l).
template <typename DA, typename DB>
auto kron(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  constexpr int Ra = DA::RowsAtCompileTime, Ca = DA::ColsAtCompileTime;
  constexpr int Rb = DB::RowsAtCompileTime, Cb = DB::ColsAtCompileTime;
  static_assert(Ra > 0 && Ca > 0 && Rb > 0 && Cb > 0, "kron needs fixed-size operands");
  using Scalar = decltype(std::declval<typename DA::Scalar>() * std::declval<typename DB::Scalar>());
  Eigen::Matrix<Scalar, Ra * Rb, Ca * Cb> out;
  for (int i = 0; i < Ra; ++i)
    for (int j = 0; j < Ca; ++j)
      out.template block<Rb, Cb>(i * Rb, j * Cb) = a(i, j) * b.derived().template cast<Scalar>();
  return out;
}

/// Eigendecomposition of a Hermitian 4x4.
///
/// Eigenvalues are sorted ascending; column k of `eigenvectors` pairs with
/// eigenvalue k and the columns are orthonormal.
struct EigenDecomposition {
  Vector4 eigenvalues;
  Matrix4 eigenvectors;
};

/// Throws NotHermitianError unless is_hermitian(m, 1e-12); NoConvergenceError
/// if the iteration budget is exhausted.
EigenDecomposition hermitian_eigen(const Matrix4& m);

/// exp(sign * i * h * t) for Hermitian h, via the spectral decomposition.
/// sign must be +1 or -1; t = 0 returns the exact identity.
Matrix4 exp_unitary(const Matrix4& h, double t, int sign = -1);

}  // namespace entlab
