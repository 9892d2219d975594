#include "entangle/states.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace entangle {

PureState::PureState(ComplexVector amplitudes, BipartiteDims dims, double norm_tol)
    : vec_(std::move(amplitudes)), dims_(dims) {
  if (vec_.size() != dims_.total()) {
    throw DimensionError("PureState: " + std::to_string(vec_.size()) +
                         " amplitudes for dimension " + std::to_string(dims_.total()));
  }
  if (!vec_.allFinite()) {
    throw ValidationError("PureState: non-finite amplitude");
  }
  const double norm = vec_.norm();
  if (std::abs(norm - 1.0) > norm_tol) {
    throw ValidationError("PureState: norm is " + std::to_string(norm) + ", expected 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, BipartiteDims dims, double tol)
    : mat_(std::move(mat)), dims_(dims) {
  if (mat_.rows() != dims_.total() || mat_.cols() != dims_.total()) {
    throw DimensionError("DensityMatrix: matrix is " + std::to_string(mat_.rows()) + "x" +
                         std::to_string(mat_.cols()) + ", dims require side " +
                         std::to_string(dims_.total()));
  }
  if (!all_finite(mat_)) {
    throw ValidationError("DensityMatrix: non-finite entry");
  }
  if (max_norm(mat_ - mat_.adjoint()) > tol) {
    throw ValidationError("DensityMatrix: not Hermitian");
  }
  const cplx tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol) {
    throw ValidationError("DensityMatrix: trace is " + std::to_string(tr.real()) +
                          ", expected 1");
  }
  const double min_eig = eigvalsh(mat_, tol).minCoeff();
  if (min_eig < -tol) {
    throw ValidationError("DensityMatrix: not positive semidefinite (min eigenvalue " +
                          std::to_string(min_eig) + ")");
  }
}

double DensityMatrix::purity() const {
  return hs_inner(mat_, mat_).real();
}

DensityMatrix DensityMatrix::reduced(Subsystem keep) const {
  const int d = dims_.local(keep);
  return DensityMatrix(partial_trace(mat_, dims_, keep), BipartiteDims(d, 1));
}

PureState bell_state(BellKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (kind) {
    case BellKind::PsiPlus:
      v(1) = h;
      v(2) = h;
      break;
    case BellKind::PsiMinus:
      v(1) = h;
      v(2) = -h;
      break;
    case BellKind::PhiPlus:
      v(0) = h;
      v(3) = h;
      break;
    case BellKind::PhiMinus:
      v(0) = h;
      v(3) = -h;
      break;
  }
  return PureState(std::move(v), BipartiteDims(2, 2));
}

DensityMatrix projector(const PureState& psi) {
  return DensityMatrix(outer(psi.amplitudes(), psi.amplitudes()), psi.dims());
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("werner: p must lie in [0, 1]");
  }
  const ComplexVector s = bell_state(BellKind::PsiMinus).amplitudes();
  ComplexMatrix m = p * outer(s, s) + ((1.0 - p) / 4.0) * identity(4);
  return DensityMatrix(std::move(m), BipartiteDims(2, 2));
}

DensityMatrix maximally_mixed(const BipartiteDims& dims) {
  return DensityMatrix(identity(dims.total()) / static_cast<double>(dims.total()), dims);
}

PureState product_state(const ComplexVector& e, const ComplexVector& f) {
  return PureState(kron(e, f), BipartiteDims(static_cast<int>(e.size()),
                                             static_cast<int>(f.size())),
                   1e-10);
}

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  // Fill column-major explicitly so the draw order is part of the contract.
  for (int c = 0; c < cols; ++c) {
    for (int r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(r, c) = cplx(re, im);
    }
  }
  return g;
}

}  // namespace

ComplexVector random_unit_vector(int dim, Rng& rng) {
  ComplexVector v = gaussian_matrix(dim, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  const ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const cplx d = r(k, k);
    const double a = std::abs(d);
    if (a > 0.0) q.col(k) *= d / a;
  }
  return q;
}

PureState random_pure(const BipartiteDims& dims, Rng& rng) {
  return PureState(random_unit_vector(dims.total(), rng), dims, 1e-10);
}

PureState random_pure(const BipartiteDims& dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dims, rng);
}

DensityMatrix random_separable(const BipartiteDims& dims, std::optional<int> terms, Rng& rng) {
  const int k = terms.value_or(dims.total() * dims.total());
  if (k < 1) {
    throw DomainError("random_separable: need at least one term");
  }
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(static_cast<std::size_t>(k));
  double total = 0.0;
  for (auto& w : weights) {
    w = expo(rng);
    total += w;
  }
  ComplexMatrix m = ComplexMatrix::Zero(dims.total(), dims.total());
  for (int t = 0; t < k; ++t) {
    const ComplexVector e = random_unit_vector(dims.d_a(), rng);
    const ComplexVector f = random_unit_vector(dims.d_b(), rng);
    const ComplexVector ef = kron(e, f);
    m += (weights[static_cast<std::size_t>(t)] / total) * outer(ef, ef);
  }
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), dims);
}

DensityMatrix random_separable(const BipartiteDims& dims, std::optional<int> terms,
                               std::uint64_t seed) {
  Rng rng(seed);
  return random_separable(dims, terms, rng);
}

DensityMatrix random_density(const BipartiteDims& dims, int rank, Rng& rng) {
  if (rank < 1 || rank > dims.total()) {
    throw DomainError("random_density: rank must lie in [1, " + std::to_string(dims.total()) +
                      "]");
  }
  const ComplexMatrix g = gaussian_matrix(dims.total(), rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), dims);
}

DensityMatrix random_density(const BipartiteDims& dims, int rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dims, rank, rng);
}

DensityMatrix apply_local_unitaries(const DensityMatrix& rho, const ComplexMatrix& u_a,
                                    const ComplexMatrix& u_b) {
  if (u_a.rows() != rho.dims().d_a() || u_b.rows() != rho.dims().d_b()) {
    throw DimensionError("apply_local_unitaries: unitary sizes do not match dims");
  }
  const ComplexMatrix u = kron(u_a, u_b);
  ComplexMatrix m = u * rho.matrix() * u.adjoint();
  m = 0.5 * (m + m.adjoint());
  return DensityMatrix(std::move(m), rho.dims());
}

}  // namespace entangle
