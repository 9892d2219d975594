#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "entangle/states.hpp"

namespace entangle {

using Direction = Eigen::Vector3d;

/// Measurement directions for the CHSH combination
/// E(a,b) + E(a,b') + E(a',b) - E(a',b').
struct ChshSetting {
  Direction a;
  Direction a_prime;
  Direction b;
  Direction b_prime;

  /// Throws DomainError unless every direction has unit norm within `tol`.
  void validate(double tol = 1e-10) const;
};

/// a . sigma.
ComplexMatrix spin_observable(const Direction& n);

/// The planar optimum for the singlet: a along z, a' along x, b and b' at
/// +-pi/4 between them. Gives chsh_value = -2 sqrt 2 on |psi->.
ChshSetting singlet_optimal_setting();

/// T_ij = tr(rho sigma_i (x) sigma_j).
Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho);

/// tr(rho (a.sigma) (x) (b.sigma)). Requires a two-qubit state.
double correlator(const DensityMatrix& rho, const Direction& a, const Direction& b);

ComplexMatrix chsh_operator(const ChshSetting& s);

/// Four-correlator combination. Requires a two-qubit state.
double chsh_value(const DensityMatrix& rho, const ChshSetting& s);

struct ChshOptimum {
  double value = 0.0;  // max |B| found; a lower bound on the true maximum
  ChshSetting setting;
};

struct ChshSearchOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double step_tol = 1e-9;
  int max_sweeps = 2000;
};

/// Multistart coordinate-wise golden-section search over the eight spherical
/// angles of (a, a', b, b'). Restarts run in parallel; the result does not
/// depend on the thread count.
ChshOptimum maximize_chsh(const DensityMatrix& rho, const ChshSearchOptions& opts = {});

/// Same search with the restarts run one after another.
ChshOptimum maximize_chsh_serial(const DensityMatrix& rho, const ChshSearchOptions& opts = {});

/// Largest out-of-plane angle (radians) of the four directions relative to their
/// best-fit plane through the origin. Zero for coplanar settings.
double coplanarity_angle(const ChshSetting& s);

}  // namespace entangle
