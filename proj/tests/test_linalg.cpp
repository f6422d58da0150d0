#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "entlab/linalg.hpp"
#include "entlab/spin.hpp"
#include "support.hpp"

using namespace entlab;
using test::kron_bruteforce;
using test::max_abs_diff;

namespace {

Matrix4 diag4(double a, double b, double c, double d) {
  Matrix4 m = Matrix4::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

}  // namespace

TEST_CASE("kron of identities is the 4x4 identity") {
  CHECK(max_abs_diff(kron(pauli(0), pauli(0)), Matrix4::Identity()) == 0.0);
}

TEST_CASE("kron(sigma3, sigma0) = diag(1, 1, -1, -1)") {
  CHECK(max_abs_diff(kron(pauli(3), pauli(0)), diag4(1, 1, -1, -1)) == 0.0);
}

TEST_CASE("kron(sigma1, sigma2) matches the entrywise expansion") {
  const Matrix4 k = kron(pauli(1), pauli(2));
  CHECK(max_abs_diff(k, kron_bruteforce(pauli(1), pauli(2))) == 0.0);
  const Complex i(0.0, 1.0);
  CHECK(k(0, 3) == -i);
  CHECK(k(1, 2) == i);
  CHECK(k(2, 1) == -i);
  CHECK(k(3, 0) == i);
  CHECK(k(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("kron is bilinear") {
  SampleRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix2 a, ap, b;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        a(r, c) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        ap(r, c) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        b(r, c) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
      }
    }
    const Matrix4 lhs = kron((a + ap).eval(), b);
    const Matrix4 rhs = kron(a, b) + kron(ap, b);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-14);
  }
}

TEST_CASE("hermitian_eigen on a diagonal matrix sorts ascending") {
  const auto eig = hermitian_eigen(diag4(3, 1, 2, 0));
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(2) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(3) == doctest::Approx(3.0).epsilon(1e-12));
  // Permutation eigenvectors: each column has a single unit entry.
  for (int k = 0; k < 4; ++k) {
    CHECK(eig.eigenvectors.col(k).cwiseAbs().maxCoeff() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hermitian_eigen of kron(sigma1, sigma0) has spectrum (-1,-1,1,1)") {
  const auto eig = hermitian_eigen(kron(pauli(1), pauli(0)));
  CHECK(std::abs(eig.eigenvalues(0) + 1.0) <= 1e-12);
  CHECK(std::abs(eig.eigenvalues(1) + 1.0) <= 1e-12);
  CHECK(std::abs(eig.eigenvalues(2) - 1.0) <= 1e-12);
  CHECK(std::abs(eig.eigenvalues(3) - 1.0) <= 1e-12);
}

TEST_CASE("hermitian_eigen matches the characteristic-polynomial oracle") {
  SampleRng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 m = random_hermitian(rng);
    const auto eig = hermitian_eigen(m);
    const auto roots = test::quartic_real_roots(test::characteristic_polynomial(m));
    REQUIRE(roots.size() == 4);
    for (int k = 0; k < 4; ++k) {
      CHECK(std::abs(eig.eigenvalues(k) - roots[static_cast<std::size_t>(k)]) <= 1e-10);
    }
  }
}

TEST_CASE("hermitian_eigen invariants on random input") {
  SampleRng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 m = random_hermitian(rng);
    const auto eig = hermitian_eigen(m);
    for (int k = 0; k < 4; ++k) {
      const double resid =
          (m * eig.eigenvectors.col(k) - eig.eigenvalues(k) * eig.eigenvectors.col(k)).norm();
      CHECK(resid <= 1e-12);
    }
    CHECK(is_unitary(eig.eigenvectors, 1e-12));
    const Matrix4 rebuilt = eig.eigenvectors * eig.eigenvalues.cast<Complex>().asDiagonal() *
                            eig.eigenvectors.adjoint();
    CHECK(max_abs_diff(rebuilt, m) <= 1e-12);
    CHECK(std::abs(eig.eigenvalues.sum() - m.trace().real()) <= 1e-12);
  }
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
  Matrix4 m = Matrix4::Zero();
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigen(m), NotHermitianError);
}

TEST_CASE("exp_unitary at t = 0 is the identity") {
  SampleRng rng(3);
  const Matrix4 u = exp_unitary(random_hermitian(rng), 0.0, -1);
  CHECK(max_abs_diff(u, Matrix4::Identity()) <= 1e-14);
}

TEST_CASE("exp_unitary phases a diagonal generator") {
  const double pi = 3.14159265358979323846;
  const Matrix4 u = exp_unitary(diag4(1, 0, 0, -1), pi, -1);
  CHECK(max_abs_diff(u, diag4(-1, 1, 1, -1)) <= 1e-12);
}

TEST_CASE("exp_unitary of kron(sigma1, sigma1) is cos(t) I - i sin(t) s11") {
  const Matrix4 s11 = kron(pauli(1), pauli(1));
  for (double t : {0.3, 1.7, -0.9}) {
    const Matrix4 expected =
        std::cos(t) * Matrix4::Identity() - Complex(0.0, 1.0) * std::sin(t) * s11;
    CHECK(max_abs_diff(exp_unitary(s11, t, -1), expected) <= 1e-12);
  }
}

TEST_CASE("exp_unitary group law and unitarity") {
  SampleRng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4 m = random_hermitian(rng);
    const double t1 = rng.uniform(-2, 2), t2 = rng.uniform(-2, 2);
    const Matrix4 u1 = exp_unitary(m, t1, -1);
    const Matrix4 u2 = exp_unitary(m, t2, -1);
    CHECK(max_abs_diff(u1 * u2, exp_unitary(m, t1 + t2, -1)) <= 1e-11);
    CHECK(is_unitary(u1, 1e-12));
    CHECK(max_abs_diff(exp_unitary(m, t1, 1), u1.adjoint()) <= 1e-12);
  }
}

TEST_CASE("exp_unitary validates the sign") {
  CHECK_THROWS_AS(exp_unitary(Matrix4::Identity(), 1.0, 2), Error);
}
