#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "entangle/bell.hpp"
#include "entangle/states.hpp"

namespace entangle {

/// Certificate that W = P + Q^{T_A} with P, Q positive semidefinite.
struct WitnessDecomposition {
  ComplexMatrix p;
  ComplexMatrix q;
};

/// Hermitian operator on H_A (x) H_B used as an entanglement witness.
class Witness {
 public:
  /// Throws ValidationError if `op` is not Hermitian, or if a decomposition is
  /// supplied that does not reproduce `op` or has a non-PSD part.
  Witness(ComplexMatrix op, BipartiteDims dims,
          std::optional<WitnessDecomposition> decomposition = std::nullopt,
          double tol = kDefaultTol);

  const ComplexMatrix& op() const { return op_; }
  const BipartiteDims& dims() const { return dims_; }
  const std::optional<WitnessDecomposition>& decomposition() const { return decomposition_; }
  bool is_decomposable() const { return decomposition_.has_value(); }

 private:
  ComplexMatrix op_;
  BipartiteDims dims_;
  std::optional<WitnessDecomposition> decomposition_;
};

/// tr(W rho). Negative values certify entanglement.
double witness_value(const Witness& w, const DensityMatrix& rho);

/// W = |phi+><phi+|^{T_A} = (I - 2|psi-><psi-|)/2 on two qubits.
Witness canonical_witness_2x2();

/// W = P + Q^{T_A}. Throws DomainError when P or Q is not PSD within `tol`.
Witness decomposable_witness(const ComplexMatrix& p, const ComplexMatrix& q,
                             const BipartiteDims& dims, double tol = kDefaultTol);

/// W = 2 I - B_CHSH. Throws DomainError for non-unit directions.
Witness witness_from_chsh(const ChshSetting& s);

struct ProductMinimum {
  double value = 0.0;  // upper bound on min <e,f|W|e,f>
  ComplexVector e;
  ComplexVector f;
};

struct SeesawOptions {
  int restarts = 32;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  int max_iterations = 1000;
};

/// Minimizes <e,f|W|e,f> over unit product vectors by alternating
/// smallest-eigenvector updates, best of `restarts` random starts (run in parallel).
ProductMinimum min_product_expectation(const Witness& w, const SeesawOptions& opts = {});
ProductMinimum min_product_expectation_serial(const Witness& w, const SeesawOptions& opts = {});

/// Hermiticity-preserving linear map B(H_in) -> B(H_out), stored as the operator
/// E = sum_ij |i><j| (x) eps(|i><j|) on H_in (x) H_out.
class LinearMap {
 public:
  LinearMap(ComplexMatrix choi, int dim_in, int dim_out, double tol = kDefaultTol);

  const ComplexMatrix& choi() const { return choi_; }
  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }

 private:
  ComplexMatrix choi_;
  int dim_in_;
  int dim_out_;
};

using MatrixFunction = std::function<ComplexMatrix(const ComplexMatrix&)>;

/// Builds E by applying `eps` to the matrix units |i><j| of a d_in-dimensional space.
LinearMap choi_from_map(const MatrixFunction& eps, int dim_in);

/// eps(rho) = tr_in(E (rho^T (x) I)).
ComplexMatrix map_from_choi(const LinearMap& e, const ComplexMatrix& rho);

/// (I_A (x) eps) rho for rho on H_A (x) H_in.
ComplexMatrix apply_map_partially(const LinearMap& e, const DensityMatrix& rho);

// Common maps, returned by their Choi operators.
LinearMap identity_map(int dim);
LinearMap transpose_map(int dim);
LinearMap unitary_conjugation_map(const ComplexMatrix& u);
/// rho -> (1 - lambda) rho + lambda tr(rho) I/d.
LinearMap depolarizing_map(int dim, double lambda);

/// Whether the Choi operator is PSD within tol (complete positivity).
bool is_completely_positive(const LinearMap& e, double tol = kDefaultTol);

}  // namespace entangle
