#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "entangle/errors.hpp"

namespace entangle {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance used for Hermiticity, trace and positivity checks.
inline constexpr double kDefaultTol = 1e-9;

enum class Subsystem { A, B };

/// Local dimensions of a bipartite system H_A (x) H_B.
///
/// Basis ordering is row-major: |i j> maps to index i * d_b + j.
class BipartiteDims {
 public:
  BipartiteDims(int d_a, int d_b);

  int d_a() const { return d_a_; }
  int d_b() const { return d_b_; }
  int total() const { return d_a_ * d_b_; }
  int local(Subsystem s) const { return s == Subsystem::A ? d_a_ : d_b_; }

  bool operator==(const BipartiteDims&) const = default;

 private:
  int d_a_;
  int d_b_;
};

/// Eigen-decomposition of a Hermitian matrix, eigenvalues sorted descending.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // column i pairs with eigenvalues[i]
};

struct SvdResult {
  ComplexMatrix u;
  RealVector singular_values;  // descending, nonnegative
  ComplexMatrix v;             // M = u * diag(s) * v^dagger
};

double max_norm(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool all_finite(const ComplexMatrix& m);

/// Kronecker product; entry (i*rB + k, j*cB + l) = A(i,j) * B(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

/// Transposes the indices of one tensor factor. Exact (a permutation of entries).
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims,
                                Subsystem subsystem);

/// Traces out the factor that is not `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteDims& dims, Subsystem keep);

/// Hermitian eigensolver. Throws ValidationError when `m` is not Hermitian within `herm_tol`.
Spectrum eigh(const ComplexMatrix& m, double herm_tol = kDefaultTol);
RealVector eigvalsh(const ComplexMatrix& m, double herm_tol = kDefaultTol);

/// Thin SVD (one-sided Jacobi, deterministic).
SvdResult svd(const ComplexMatrix& m);

/// Hilbert-Schmidt inner product sum_ij conj(A_ij) B_ij = tr(A^dagger B).
cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Pauli matrices and friends.
ComplexMatrix identity(int n);
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Computational basis vector |index> of dimension `dim`.
ComplexVector basis_ket(int dim, int index);

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b);

}  // namespace entangle
