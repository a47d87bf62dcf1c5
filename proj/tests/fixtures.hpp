#pragma once

// Shared test inputs: seeded random tensors and the worked example matrices.

#include <random>

#include "ela/exotic.hpp"
#include "ela/tensor_core.hpp"

namespace fixture {

using ela::ElasticityTensor;
using ela::Mat6;

inline Mat6 diag_block(double a, double b, double c, double ab, double ac, double bc, double s4, double s5,
                       double s6) {
  Mat6 k;
  k(0, 0) = a, k(1, 1) = b, k(2, 2) = c;
  k(0, 1) = k(1, 0) = ab;
  k(0, 2) = k(2, 0) = ac;
  k(1, 2) = k(2, 1) = bc;
  k(3, 3) = s4, k(4, 4) = s5, k(5, 5) = s6;
  return k;
}

// Worked examples, Kelvin form.
inline ElasticityTensor uti_example() {
  return ElasticityTensor::from_kelvin(diag_block(350, 350, 300, 200, 250, 250, 60, 60, 120));
}
inline ElasticityTensor idti_example() {
  return ElasticityTensor::from_kelvin(diag_block(350, 350, 450, 200, 250, 250, 150, 150, 150));
}
inline ElasticityTensor iyti_example() {
  return ElasticityTensor::from_kelvin(diag_block(10, 10, 10, -2, -3, -3, 13, 13, 12));
}

inline ElasticityTensor random_tensor(std::mt19937_64& rng, double half_width = 1.0) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  Mat6 k;
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) k(i, j) = k(j, i) = u(rng);
  return ElasticityTensor::from_kelvin(k);
}

// Positive definite with condition number below about 4.
inline ElasticityTensor random_spd(std::mt19937_64& rng) {
  return 4.0 * ElasticityTensor::identity() + random_tensor(rng, 0.3);
}

inline ela::SymTensor2 random_sym2(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return ela::SymTensor2::from_components(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
}

inline ela::Vec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  ela::Vec3 v{n(rng), n(rng), n(rng)};
  const double len = ela::norm(v);
  for (double& x : v) x /= len;
  return v;
}

inline double rel(const ElasticityTensor& a, const ElasticityTensor& b) {
  const double s = std::max(1.0, b.norm());
  return (a - b).norm() / s;
}

}  // namespace fixture
