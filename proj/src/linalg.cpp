#include "entlab/linalg.hpp"

#include <Eigen/Eigenvalues>

namespace entlab {

EigenDecomposition hermitian_eigen(const Matrix4& m) {
  if (!is_hermitian(m, 1e-12)) {
    throw NotHermitianError("hermitian_eigen: input is not Hermitian to 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(m);
  if (solver.info() == Eigen::NoConvergence) {
    throw NoConvergenceError("hermitian_eigen: eigensolver did not converge");
  }
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian_eigen: eigensolver failed");
  }
  return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

Matrix4 exp_unitary(const Matrix4& h, double t, int sign) {
  if (sign != 1 && sign != -1) {
    throw Error("exp_unitary: sign must be +1 or -1");
  }
  const EigenDecomposition eig = hermitian_eigen(h);
  if (t == 0.0) return Matrix4::Identity();
  const Eigen::Vector4cd phases =
      (Complex(0.0, sign * t) * eig.eigenvalues.cast<Complex>()).array().exp();
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace entlab
