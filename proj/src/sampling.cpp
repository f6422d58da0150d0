#include "entlab/sampling.hpp"

#include <cmath>
#include <numbers>

namespace entlab {

FamilyParams random_family_params(int family, SampleRng& rng) {
  FamilyParams p;
  p.family = family;
  double bridge = 0.0;
  switch (family) {
    case 1:
    case 2: {
      p.diag1 = rng.uniform(0.0, 1.0);
      bridge = p.diag1 * (1.0 - p.diag1);
      break;
    }
    case 3: {
      p.diag1 = rng.uniform(0.0, 1.0);                // c3
      p.diag2 = rng.uniform(0.0, 1.0 - p.diag1);      // d3
      bridge = (1.0 - p.diag1 - p.diag2) * p.diag1;
      break;
    }
    case 4: {
      p.diag1 = rng.uniform(0.0, 1.0);                // a4
      p.diag2 = rng.uniform(0.0, 1.0 - p.diag1);      // b4
      bridge = p.diag2 * (1.0 - p.diag1 - p.diag2);
      break;
    }
    case 5: {
      p.diag1 = rng.uniform(0.0, 1.0);                // c5
      p.diag2 = rng.uniform(0.0, 1.0 - p.diag1);      // d5
      bridge = (1.0 - p.diag1 - p.diag2) * p.diag2;
      break;
    }
    case 6: {
      p.diag1 = rng.uniform(0.0, 1.0);                // b6
      p.diag2 = rng.uniform(0.0, 1.0 - p.diag1);      // d6
      bridge = (1.0 - p.diag1 - p.diag2) * p.diag2;
      break;
    }
    default:
      throw Error("family id must be in 1..6, got " + std::to_string(family));
  }
  p.v = rng.uniform(0.0, std::sqrt(std::max(bridge, 0.0)));
  p.alpha = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return p;
}

HamiltonianCoefficients random_general_coefficients(GeneralForm form, SampleRng& rng,
                                                    bool symmetric_h30_h03) {
  NamedHamiltonianForm named;
  named.form = form == GeneralForm::H1 ? HamiltonianForm::H1 : HamiltonianForm::H2;
  named.params.h30 = rng.uniform(-1.0, 1.0);
  named.params.h03 = symmetric_h30_h03 ? *named.params.h30 : rng.uniform(-1.0, 1.0);
  named.params.h33 = rng.uniform(-1.0, 1.0);
  if (form == GeneralForm::H1) {
    named.params.f1 = rng.uniform(-1.0, 1.0);
    named.params.g1 = rng.uniform(-1.0, 1.0);
  } else {
    named.params.f2 = rng.uniform(-1.0, 1.0);
    named.params.g2 = rng.uniform(-1.0, 1.0);
  }
  return coefficients_of(named);
}

Matrix4 random_hermitian(SampleRng& rng) {
  Matrix4 a;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      a(r, c) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  return 0.5 * (a + a.adjoint());
}

DensityMatrix random_density(SampleRng& rng) {
  Matrix4 a;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      a(r, c) = Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
  }
  Matrix4 g = a * a.adjoint();
  g /= g.trace();
  return DensityMatrix(0.5 * (g + g.adjoint()));
}

}  // namespace entlab
