#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "entangle/linalg.hpp"

namespace entangle {

/// Caller-owned random engine. Every generator takes one explicitly.
using Rng = std::mt19937_64;

/// Unit-norm state vector on H_A (x) H_B.
class PureState {
 public:
  /// Throws DimensionError on size mismatch, ValidationError if | ||v|| - 1 | > norm_tol.
  PureState(ComplexVector amplitudes, BipartiteDims dims, double norm_tol = 1e-12);

  const ComplexVector& amplitudes() const { return vec_; }
  const BipartiteDims& dims() const { return dims_; }

 private:
  ComplexVector vec_;
  BipartiteDims dims_;
};

/// Validated Hermitian, positive-semidefinite, unit-trace matrix on H_A (x) H_B.
class DensityMatrix {
 public:
  /// Throws DimensionError on shape mismatch and ValidationError when any of
  /// Hermiticity, unit trace or positivity fails by more than `tol`.
  DensityMatrix(ComplexMatrix mat, BipartiteDims dims, double tol = kDefaultTol);

  const ComplexMatrix& matrix() const { return mat_; }
  const BipartiteDims& dims() const { return dims_; }
  int dim() const { return dims_.total(); }

  /// tr(rho^2).
  double purity() const;
  DensityMatrix reduced(Subsystem keep) const;

 private:
  ComplexMatrix mat_;
  BipartiteDims dims_;
};

enum class BellKind { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

/// |psi+-> = (|01> +- |10>)/sqrt2, |phi+-> = (|00> +- |11>)/sqrt2.
PureState bell_state(BellKind kind);

DensityMatrix projector(const PureState& psi);

/// p |psi-><psi-| + (1-p)/4 I. Throws DomainError for p outside [0, 1].
DensityMatrix werner(double p);

DensityMatrix maximally_mixed(const BipartiteDims& dims);

PureState product_state(const ComplexVector& e, const ComplexVector& f);

/// Haar-random unit vector (normalized complex Gaussian).
ComplexVector random_unit_vector(int dim, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with phase correction).
ComplexMatrix random_unitary(int dim, Rng& rng);

PureState random_pure(const BipartiteDims& dims, Rng& rng);
PureState random_pure(const BipartiteDims& dims, std::uint64_t seed);

/// sum_k p_k |e_k><e_k| (x) |f_k><f_k| with Haar local states and Dirichlet(1,...,1)
/// weights. `terms` defaults to (d_A d_B)^2.
DensityMatrix random_separable(const BipartiteDims& dims, std::optional<int> terms, Rng& rng);
DensityMatrix random_separable(const BipartiteDims& dims, std::optional<int> terms,
                               std::uint64_t seed);

/// G G^dagger / tr(G G^dagger) with G a dim x rank complex Gaussian matrix.
/// Throws DomainError unless 1 <= rank <= dims.total().
DensityMatrix random_density(const BipartiteDims& dims, int rank, Rng& rng);
DensityMatrix random_density(const BipartiteDims& dims, int rank, std::uint64_t seed);

/// Conjugates rho by U_A (x) U_B.
DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& u_a,
                                    const ComplexMatrix& u_b);

}  // namespace entangle
