#include "entangle/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace entangle {

namespace {

constexpr double kEntropyClampFloor = -1e-6;
constexpr double kDistributionTol = 1e-9;
constexpr double kPartialSumTol = 1e-10;

std::vector<double> sorted_desc(std::span<const double> v, std::size_t len) {
  std::vector<double> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  out.resize(std::max(len, out.size()), 0.0);
  return out;
}

void require_distribution(std::span<const double> p, const char* op) {
  double sum = 0.0;
  for (double x : p) {
    if (!std::isfinite(x) || x < -1e-12) {
      throw DomainError(std::string(op) + ": entries must be nonnegative");
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > kDistributionTol) {
    throw DomainError(std::string(op) + ": entries sum to " + std::to_string(sum) +
                      ", expected 1");
  }
}

std::vector<double> to_vector(const RealVector& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace

ComplexVector SchmidtDecomposition::reconstruct() const {
  const Eigen::Index da = basis_a.rows();
  const Eigen::Index db = basis_b.rows();
  ComplexVector psi = ComplexVector::Zero(da * db);
  for (int i = 0; i < rank(); ++i) {
    psi += coefficients(i) * kron(ComplexVector(basis_a.col(i)), ComplexVector(basis_b.col(i)));
  }
  return psi;
}

SchmidtDecomposition schmidt(const PureState& psi, double cutoff) {
  const int da = psi.dims().d_a();
  const int db = psi.dims().d_b();
  // Coefficient matrix C(i, j) = <i j|psi>, so psi = sum_k s_k u_k (x) conj(v_k).
  ComplexMatrix c(da, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) c(i, j) = psi.amplitudes()(i * db + j);
  const SvdResult dec = svd(c);
  int keep = 0;
  while (keep < dec.singular_values.size() && dec.singular_values(keep) > cutoff) ++keep;
  SchmidtDecomposition out;
  out.coefficients = dec.singular_values.head(keep);
  out.basis_a = dec.u.leftCols(keep);
  out.basis_b = dec.v.leftCols(keep).conjugate();
  return out;
}

bool is_product(const PureState& psi, double cutoff) {
  return schmidt(psi, cutoff).rank() == 1;
}

bool ppt_is_sufficient(const BipartiteDims& dims) {
  const int lo = std::min(dims.d_a(), dims.d_b());
  const int hi = std::max(dims.d_a(), dims.d_b());
  // Trivial factors (dimension 1) make every state a product state.
  return lo == 1 || (lo == 2 && hi <= 3);
}

CriterionVerdict ppt_test(const DensityMatrix& rho, double tol) {
  const RealVector eig =
      eigvalsh(partial_transpose(rho.matrix(), rho.dims(), Subsystem::A), tol);
  CriterionVerdict v;
  v.criterion = "ppt";
  v.margin = eig.minCoeff();
  v.violated = v.margin < -tol;
  v.conclusive_for_entanglement = v.violated;
  v.separable_certified = !v.violated && ppt_is_sufficient(rho.dims());
  return v;
}

double majorization_gap(std::span<const double> x, std::span<const double> y) {
  const std::size_t len = std::max(x.size(), y.size());
  const auto xs = sorted_desc(x, len);
  const auto ys = sorted_desc(y, len);
  double sx = 0.0;
  double sy = 0.0;
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t l = 0; l < len; ++l) {
    sx += xs[l];
    sy += ys[l];
    gap = std::min(gap, sy - sx);
  }
  return len == 0 ? 0.0 : gap;
}

bool majorizes(std::span<const double> x, std::span<const double> y) {
  require_distribution(x, "majorizes");
  require_distribution(y, "majorizes");
  return majorization_gap(x, y) >= -kPartialSumTol;
}

CriterionVerdict majorization_test(const DensityMatrix& rho, double tol) {
  const auto global = to_vector(eigvalsh(rho.matrix(), tol));
  const auto local_a =
      to_vector(eigvalsh(partial_trace(rho.matrix(), rho.dims(), Subsystem::A), tol));
  const auto local_b =
      to_vector(eigvalsh(partial_trace(rho.matrix(), rho.dims(), Subsystem::B), tol));
  CriterionVerdict v;
  v.criterion = "majorization";
  v.margin = std::min(majorization_gap(global, local_a), majorization_gap(global, local_b));
  v.violated = v.margin < -tol;
  v.conclusive_for_entanglement = v.violated;
  return v;
}

double entropy_of_spectrum(const RealVector& eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < kEntropyClampFloor) {
      throw DomainError("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                        " is negative beyond tolerance");
    }
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return std::max(s, 0.0);
}

double von_neumann_entropy(const ComplexMatrix& rho) {
  return entropy_of_spectrum(eigvalsh(rho));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.matrix());
}

CriterionVerdict entropy_test(const DensityMatrix& rho, double tol) {
  const double s = von_neumann_entropy(rho.matrix());
  const double s_a = von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), Subsystem::B));
  CriterionVerdict v;
  v.criterion = "entropy";
  v.margin = std::min(s - s_a, s - s_b);
  v.violated = v.margin < -tol;
  v.conclusive_for_entanglement = v.violated;
  return v;
}

double shannon_entropy(std::span<const double> p) {
  require_distribution(p, "shannon_entropy");
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return std::max(h, 0.0);
}

}  // namespace entangle
