#pragma once

#include <cstdint>
#include <random>

#include "entlab/hamiltonian.hpp"
#include "entlab/states.hpp"

namespace entlab {

/// Seeded pseudo-random source used by every randomized check (mt19937_64);
/// reports embed the seed so any run can be reproduced.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// A uniformly drawn valid parameter point of the family: weights on the
/// simplex, v up to the positivity bound, phase in [0, 2*pi).
FamilyParams random_family_params(int family, SampleRng& rng);

/// Coefficient table of the general form with every free parameter drawn from
/// [-1, 1]; symmetric_h30_h03 forces h03 = h30.
HamiltonianCoefficients random_general_coefficients(GeneralForm form, SampleRng& rng,
                                                    bool symmetric_h30_h03 = false);

/// Hermitian 4x4 with entries of magnitude O(1).
Matrix4 random_hermitian(SampleRng& rng);

/// Full-rank random mixed state (Gram construction).
DensityMatrix random_density(SampleRng& rng);

}  // namespace entlab
