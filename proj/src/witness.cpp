#include "entangle/witness.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace entangle {

namespace {

double min_eigenvalue(const ComplexMatrix& m, double tol) {
  return eigvalsh(m, tol).minCoeff();
}

void require_psd(const ComplexMatrix& m, int dim, double tol, const char* name) {
  if (m.rows() != dim || m.cols() != dim) {
    throw DimensionError(std::string("decomposable_witness: ") + name + " has wrong shape");
  }
  if (!is_hermitian(m, tol) || min_eigenvalue(m, tol) < -tol) {
    throw DomainError(std::string("decomposable_witness: ") + name +
                      " is not positive semidefinite");
  }
}

Rng restart_rng(std::uint64_t seed, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), 0x57495455u};
  return Rng(seq);
}

// Contracts W with f on the B factor: M_A(i,j) = sum_{k,l} conj(f_k) W(ik, jl) f_l.
ComplexMatrix contract_b(const ComplexMatrix& w, const ComplexVector& f, int da, int db) {
  ComplexMatrix m(da, da);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      m(i, j) = f.dot(w.block(i * db, j * db, db, db) * f);
  return m;
}

// M_B(k,l) = sum_{i,j} conj(e_i) W(ik, jl) e_j.
ComplexMatrix contract_a(const ComplexMatrix& w, const ComplexVector& e, int da, int db) {
  ComplexMatrix m = ComplexMatrix::Zero(db, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      m += std::conj(e(i)) * e(j) * w.block(i * db, j * db, db, db);
  return m;
}

std::pair<double, ComplexVector> lowest(const ComplexMatrix& m) {
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("min_product_expectation: eigensolver did not converge");
  }
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

ProductMinimum seesaw(const Witness& w, const SeesawOptions& opts, int k) {
  const int da = w.dims().d_a();
  const int db = w.dims().d_b();
  Rng rng = restart_rng(opts.seed, k);
  ComplexVector f = random_unit_vector(db, rng);
  ComplexVector e;
  double value = std::numeric_limits<double>::infinity();
  for (int it = 0; it < opts.max_iterations; ++it) {
    auto [va, ea] = lowest(contract_b(w.op(), f, da, db));
    e = std::move(ea);
    auto [vb, fb] = lowest(contract_a(w.op(), e, da, db));
    f = std::move(fb);
    const double change = std::abs(value - vb);
    value = vb;
    if (change < opts.tol) break;
  }
  return {value, e, f};
}

ProductMinimum pick_best(std::vector<ProductMinimum> results) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].value < results[best].value) best = k;
  }
  return std::move(results[best]);
}

}  // namespace

Witness::Witness(ComplexMatrix op, BipartiteDims dims,
                 std::optional<WitnessDecomposition> decomposition, double tol)
    : op_(std::move(op)), dims_(dims), decomposition_(std::move(decomposition)) {
  if (op_.rows() != dims_.total() || op_.cols() != dims_.total()) {
    throw DimensionError("Witness: operator shape does not match dims");
  }
  if (!all_finite(op_) || !is_hermitian(op_, tol)) {
    throw ValidationError("Witness: operator is not Hermitian");
  }
  if (decomposition_) {
    const auto& [p, q] = *decomposition_;
    if (p.rows() != dims_.total() || q.rows() != dims_.total()) {
      throw DimensionError("Witness: decomposition shape does not match dims");
    }
    if (max_norm(op_ - (p + partial_transpose(q, dims_, Subsystem::A))) > tol) {
      throw ValidationError("Witness: decomposition does not reproduce the operator");
    }
    if (min_eigenvalue(p, tol) < -tol || min_eigenvalue(q, tol) < -tol) {
      throw ValidationError("Witness: decomposition parts are not positive semidefinite");
    }
  }
}

double witness_value(const Witness& w, const DensityMatrix& rho) {
  if (w.dims() != rho.dims()) {
    throw DimensionError("witness_value: witness and state dims differ");
  }
  // W is Hermitian, so tr(W rho) = <W, rho>_HS.
  return hs_inner(w.op(), rho.matrix()).real();
}

Witness canonical_witness_2x2() {
  const ComplexVector phi = bell_state(BellKind::PhiPlus).amplitudes();
  return decomposable_witness(ComplexMatrix::Zero(4, 4), outer(phi, phi), BipartiteDims(2, 2));
}

Witness decomposable_witness(const ComplexMatrix& p, const ComplexMatrix& q,
                             const BipartiteDims& dims, double tol) {
  require_psd(p, dims.total(), tol, "P");
  require_psd(q, dims.total(), tol, "Q");
  ComplexMatrix op = p + partial_transpose(q, dims, Subsystem::A);
  return Witness(std::move(op), dims, WitnessDecomposition{p, q}, tol);
}

Witness witness_from_chsh(const ChshSetting& s) {
  s.validate();
  return Witness(2.0 * identity(4) - chsh_operator(s), BipartiteDims(2, 2));
}

ProductMinimum min_product_expectation(const Witness& w, const SeesawOptions& opts) {
  if (opts.restarts < 1) throw DomainError("min_product_expectation: restarts must be positive");
  std::vector<ProductMinimum> results(static_cast<std::size_t>(opts.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < opts.restarts; ++k) {
    results[static_cast<std::size_t>(k)] = seesaw(w, opts, k);
  }
  return pick_best(std::move(results));
}

ProductMinimum min_product_expectation_serial(const Witness& w, const SeesawOptions& opts) {
  if (opts.restarts < 1) throw DomainError("min_product_expectation: restarts must be positive");
  std::vector<ProductMinimum> results;
  for (int k = 0; k < opts.restarts; ++k) results.push_back(seesaw(w, opts, k));
  return pick_best(std::move(results));
}

LinearMap::LinearMap(ComplexMatrix choi, int dim_in, int dim_out, double tol)
    : choi_(std::move(choi)), dim_in_(dim_in), dim_out_(dim_out) {
  if (dim_in < 1 || dim_out < 1 || choi_.rows() != dim_in * dim_out ||
      choi_.cols() != dim_in * dim_out) {
    throw DimensionError("LinearMap: operator shape does not match dim_in * dim_out");
  }
  if (!all_finite(choi_) || !is_hermitian(choi_, tol)) {
    throw ValidationError("LinearMap: map does not preserve Hermiticity");
  }
}

LinearMap choi_from_map(const MatrixFunction& eps, int dim_in) {
  if (dim_in < 1) throw DimensionError("choi_from_map: dim_in must be positive");
  ComplexMatrix unit = ComplexMatrix::Zero(dim_in, dim_in);
  unit(0, 0) = 1.0;
  const Eigen::Index dim_out = eps(unit).rows();
  ComplexMatrix e(dim_in * dim_out, dim_in * dim_out);
  for (int i = 0; i < dim_in; ++i) {
    for (int j = 0; j < dim_in; ++j) {
      unit.setZero();
      unit(i, j) = 1.0;
      const ComplexMatrix image = eps(unit);
      if (image.rows() != dim_out || image.cols() != dim_out) {
        throw DimensionError("choi_from_map: map output shape is not constant");
      }
      e.block(i * dim_out, j * dim_out, dim_out, dim_out) = image;
    }
  }
  return LinearMap(std::move(e), dim_in, static_cast<int>(dim_out));
}

ComplexMatrix map_from_choi(const LinearMap& e, const ComplexMatrix& rho) {
  if (rho.rows() != e.dim_in() || rho.cols() != e.dim_in()) {
    throw DimensionError("map_from_choi: input is not dim_in x dim_in");
  }
  const ComplexMatrix lifted = kron(ComplexMatrix(rho.transpose()), identity(e.dim_out()));
  return partial_trace(e.choi() * lifted, BipartiteDims(e.dim_in(), e.dim_out()), Subsystem::B);
}

ComplexMatrix apply_map_partially(const LinearMap& e, const DensityMatrix& rho) {
  const int da = rho.dims().d_a();
  const int din = e.dim_in();
  const int dout = e.dim_out();
  if (rho.dims().d_b() != din) {
    throw DimensionError("apply_map_partially: map input dimension differs from d_B");
  }
  ComplexMatrix out(da * dout, da * dout);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) {
      out.block(i * dout, j * dout, dout, dout) =
          map_from_choi(e, rho.matrix().block(i * din, j * din, din, din));
    }
  }
  return out;
}

LinearMap identity_map(int dim) {
  return choi_from_map([](const ComplexMatrix& m) { return m; }, dim);
}

LinearMap transpose_map(int dim) {
  return choi_from_map([](const ComplexMatrix& m) { return ComplexMatrix(m.transpose()); }, dim);
}

LinearMap unitary_conjugation_map(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("unitary_conjugation_map: u is not square");
  return choi_from_map([u](const ComplexMatrix& m) { return ComplexMatrix(u * m * u.adjoint()); },
                       static_cast<int>(u.rows()));
}

LinearMap depolarizing_map(int dim, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("depolarizing_map: lambda must lie in [0, 1]");
  }
  return choi_from_map(
      [dim, lambda](const ComplexMatrix& m) {
        return ComplexMatrix((1.0 - lambda) * m + lambda * m.trace() * identity(dim) / double(dim));
      },
      dim);
}

bool is_completely_positive(const LinearMap& e, double tol) {
  return min_eigenvalue(e.choi(), tol) >= -tol;
}

}  // namespace entangle
