#include "entangle/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace entangle {

namespace {

// Below this many output entries the OpenMP fork costs more than the loop.
constexpr Eigen::Index kParallelThreshold = 4096;

void require_square_bipartite(const ComplexMatrix& rho, const BipartiteDims& dims,
                              const char* op) {
  if (rho.rows() != rho.cols() || rho.rows() != dims.total()) {
    throw DimensionError(std::string(op) + ": matrix is " + std::to_string(rho.rows()) + "x" +
                         std::to_string(rho.cols()) + ", expected side " +
                         std::to_string(dims.total()));
  }
}

Eigen::Index checked_mul(Eigen::Index x, Eigen::Index y) {
  Eigen::Index out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw DimensionError("kron: dimension product overflows");
  }
  return out;
}

}  // namespace

BipartiteDims::BipartiteDims(int d_a, int d_b) : d_a_(d_a), d_b_(d_b) {
  if (d_a < 1 || d_b < 1) {
    throw DimensionError("bipartite dimensions must be positive, got (" + std::to_string(d_a) +
                         "," + std::to_string(d_b) + ")");
  }
  int total = 0;
  if (__builtin_mul_overflow(d_a, d_b, &total)) {
    throw DimensionError("bipartite dimension product overflows");
  }
}

double max_norm(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return max_norm(m - m.adjoint()) <= tol;
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = checked_mul(a.rows(), b.rows());
  const Eigen::Index cols = checked_mul(a.cols(), b.cols());
  ComplexMatrix out(rows, cols);
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
#pragma omp parallel for collapse(2) if (rows * cols > kParallelThreshold)
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(checked_mul(a.size(), b.size()));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims,
                                Subsystem subsystem) {
  require_square_bipartite(rho, dims, "partial_transpose");
  const int da = dims.d_a();
  const int db = dims.d_b();
  const Eigen::Index n = dims.total();
  ComplexMatrix out(n, n);
  // Row index (i, mu), column index (j, nu): i, j on A; mu, nu on B.
#pragma omp parallel for collapse(2) if (n * n > kParallelThreshold)
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      for (int mu = 0; mu < db; ++mu) {
        for (int nu = 0; nu < db; ++nu) {
          const auto src = subsystem == Subsystem::A
                               ? rho(j * db + mu, i * db + nu)
                               : rho(i * db + nu, j * db + mu);
          out(i * db + mu, j * db + nu) = src;
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteDims& dims, Subsystem keep) {
  require_square_bipartite(rho, dims, "partial_trace");
  const int da = dims.d_a();
  const int db = dims.d_b();
  if (keep == Subsystem::A) {
    ComplexMatrix out(da, da);
#pragma omp parallel for collapse(2) if (da * da * db > kParallelThreshold)
    for (int i = 0; i < da; ++i) {
      for (int j = 0; j < da; ++j) {
        cplx acc = 0.0;
        for (int mu = 0; mu < db; ++mu) acc += rho(i * db + mu, j * db + mu);
        out(i, j) = acc;
      }
    }
    return out;
  }
  ComplexMatrix out(db, db);
#pragma omp parallel for collapse(2) if (db * db * da > kParallelThreshold)
  for (int mu = 0; mu < db; ++mu) {
    for (int nu = 0; nu < db; ++nu) {
      cplx acc = 0.0;
      for (int i = 0; i < da; ++i) acc += rho(i * db + mu, i * db + nu);
      out(mu, nu) = acc;
    }
  }
  return out;
}

Spectrum eigh(const ComplexMatrix& m, double herm_tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("eigh: matrix is not square");
  }
  if (!all_finite(m)) {
    throw ValidationError("eigh: matrix has non-finite entries");
  }
  if (max_norm(m - m.adjoint()) > herm_tol) {
    throw ValidationError("eigh: matrix is not Hermitian within tolerance");
  }
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigh: eigensolver did not converge");
  }
  // Eigen returns ascending order; reverse to descending.
  const Eigen::Index n = herm.rows();
  Spectrum out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues(k) = solver.eigenvalues()(n - 1 - k);
    out.eigenvectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  }
  return out;
}

RealVector eigvalsh(const ComplexMatrix& m, double herm_tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("eigvalsh: matrix is not square");
  }
  if (!all_finite(m) || max_norm(m - m.adjoint()) > herm_tol) {
    throw ValidationError("eigvalsh: matrix is not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(0.5 * (m + m.adjoint()),
                                                      Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigvalsh: eigensolver did not converge");
  }
  return solver.eigenvalues().reverse();
}

SvdResult svd(const ComplexMatrix& m) {
  if (!all_finite(m)) {
    throw ValidationError("svd: matrix has non-finite entries");
  }
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("svd: Jacobi SVD did not converge");
  }
  return {solver.matrixU(), solver.singularValues(), solver.matrixV()};
}

cplx hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("hs_inner: shape mismatch");
  }
  return a.conjugate().cwiseProduct(b).sum();
}

ComplexMatrix identity(int n) {
  return ComplexMatrix::Identity(n, n);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexVector basis_ket(int dim, int index) {
  if (index < 0 || index >= dim) {
    throw DimensionError("basis_ket: index out of range");
  }
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
  return a * b.adjoint();
}

}  // namespace entangle
