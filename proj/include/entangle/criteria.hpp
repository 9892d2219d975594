#pragma once

#include <span>
#include <string>

#include "entangle/states.hpp"

namespace entangle {

inline constexpr double kSchmidtCutoff = 1e-10;

/// psi = sum_i a_i |e_i> (x) |f_i>, coefficients descending and above the cutoff.
struct SchmidtDecomposition {
  RealVector coefficients;
  ComplexMatrix basis_a;  // columns |e_i>
  ComplexMatrix basis_b;  // columns |f_i>

  int rank() const { return static_cast<int>(coefficients.size()); }
  ComplexVector reconstruct() const;
};

/// Outcome of a necessary-for-separability test.
///
/// `violated` certifies entanglement. A pass is only a separability
/// certificate when `separable_certified` is set (PPT in 2x2 or 2x3).
struct CriterionVerdict {
  std::string criterion;
  bool violated = false;
  double margin = 0.0;  // signed distance to the threshold; negative side is violation
  bool conclusive_for_entanglement = false;
  bool separable_certified = false;
};

SchmidtDecomposition schmidt(const PureState& psi, double cutoff = kSchmidtCutoff);
bool is_product(const PureState& psi, double cutoff = kSchmidtCutoff);

/// Whether the PPT condition is also sufficient for separability in these dims.
bool ppt_is_sufficient(const BipartiteDims& dims);

/// margin = lambda_min(rho^{T_A}); violated iff margin < -tol.
CriterionVerdict ppt_test(const DensityMatrix& rho, double tol = kDefaultTol);

/// min_l ( sum_{i<=l} y_i - sum_{i<=l} x_i ) after sorting both descending and
/// zero-padding the shorter. Nonnegative iff y majorizes x.
double majorization_gap(std::span<const double> x, std::span<const double> y);

/// True iff x is majorized by y (x < y), within 1e-10 on the partial sums.
/// Throws DomainError unless both are probability vectors within 1e-9.
bool majorizes(std::span<const double> x, std::span<const double> y);

/// lambda(rho) must be majorized by both lambda(rho_A) and lambda(rho_B).
CriterionVerdict majorization_test(const DensityMatrix& rho, double tol = kDefaultTol);

/// -tr rho log2 rho. Eigenvalues in [-1e-6, 0) are clamped; below that DomainError.
double von_neumann_entropy(const ComplexMatrix& rho);
double von_neumann_entropy(const DensityMatrix& rho);
double entropy_of_spectrum(const RealVector& eigenvalues);

/// S(rho) >= S(rho_A) and S(rho) >= S(rho_B).
CriterionVerdict entropy_test(const DensityMatrix& rho, double tol = kDefaultTol);

/// Shannon entropy in bits. Throws DomainError for invalid distributions.
double shannon_entropy(std::span<const double> p);

}  // namespace entangle
