#pragma once

#include <random>

#include "entangle/linalg.hpp"

namespace testing {

inline entangle::ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  entangle::ComplexMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = {n(rng), n(rng)};
  return m;
}

inline entangle::ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  const entangle::ComplexMatrix g = random_matrix(dim, dim, rng);
  return 0.5 * (g + g.adjoint());
}

inline entangle::ComplexMatrix random_psd(int dim, std::mt19937_64& rng) {
  const entangle::ComplexMatrix g = random_matrix(dim, dim, rng);
  return g * g.adjoint();
}

}  // namespace testing
