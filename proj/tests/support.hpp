// Test-only helpers and independent oracles. Everything here deliberately
// avoids the library's eigensolver / partial-transpose path so the checks stay
// independent of what they verify.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "entlab/linalg.hpp"
#include "entlab/sampling.hpp"

namespace entlab::test {

// Coefficients (c0..c4) of det(x I - M) = c4 x^4 + c3 x^3 + ... + c0 via
// Newton's identities on the traces of powers; real for Hermitian input.
inline std::array<double, 5> characteristic_polynomial(const Matrix4& m) {
  const Matrix4 m2 = m * m;
  const Matrix4 m3 = m2 * m;
  const Matrix4 m4 = m3 * m;
  const double p1 = m.trace().real();
  const double p2 = m2.trace().real();
  const double p3 = m3.trace().real();
  const double p4 = m4.trace().real();
  const double e1 = p1;
  const double e2 = (e1 * p1 - p2) / 2.0;
  const double e3 = (e2 * p1 - e1 * p2 + p3) / 3.0;
  const double e4 = (e3 * p1 - e2 * p2 + e1 * p3 - p4) / 4.0;
  return {e4, -e3, e2, -e1, 1.0};
}

// Durand-Kerner on the quartic, polished with a few Newton steps. Returns the
// sorted real parts (Hermitian input has real roots).
inline std::vector<double> quartic_real_roots(const std::array<double, 5>& c) {
  using C = std::complex<double>;
  const auto eval = [&](C x) {
    return ((c[4] * x + c[3]) * x + c[2]) * x * x + c[1] * x + c[0];
  };
  const auto deriv = [&](C x) {
    return ((4.0 * c[4] * x + 3.0 * c[3]) * x + 2.0 * c[2]) * x + c[1];
  };
  std::array<C, 4> r;
  const C w(0.4, 0.9);
  r[0] = w;
  for (int k = 1; k < 4; ++k) r[k] = r[k - 1] * w;
  for (int it = 0; it < 500; ++it) {
    double step = 0.0;
    for (int k = 0; k < 4; ++k) {
      C denom(1.0, 0.0);
      for (int j = 0; j < 4; ++j) {
        if (j != k) denom *= r[k] - r[j];
      }
      const C delta = eval(r[k]) / denom;
      r[k] -= delta;
      step = std::max(step, std::abs(delta));
    }
    if (step < 1e-14) break;
  }
  std::vector<double> roots;
  for (int k = 0; k < 4; ++k) {
    double x = r[k].real();
    for (int it = 0; it < 4; ++it) {
      const double f = eval(C(x, 0.0)).real();
      const double df = deriv(C(x, 0.0)).real();
      if (std::abs(df) > 1e-12) x -= f / df;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Brute-force Kronecker product straight from the index formula.
inline Matrix4 kron_bruteforce(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

// Haar-ish random single-qubit unitary from an explicit parametrization.
inline Matrix2 random_single_qubit_unitary(SampleRng& rng) {
  const double a = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
  const double b = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
  const double c = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
  const double t = rng.uniform(0.0, 3.14159265358979323846 / 2.0);
  Matrix2 u;
  u(0, 0) = std::polar(std::cos(t), a);
  u(0, 1) = std::polar(std::sin(t), b);
  u(1, 0) = -std::polar(std::sin(t), c);
  u(1, 1) = std::polar(std::cos(t), -a + b + c);
  return u;
}

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace entlab::test
