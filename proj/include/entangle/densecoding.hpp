#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "entangle/criteria.hpp"
#include "entangle/witness.hpp"

namespace entangle {

/// Signal states {p_i, rho_i} received by the decoder.
class Ensemble {
 public:
  /// Throws DomainError for invalid probabilities, DimensionError for mixed dims.
  Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states);

  const std::vector<double>& probs() const { return probs_; }
  const std::vector<DensityMatrix>& states() const { return states_; }
  ComplexMatrix average() const;

 private:
  std::vector<double> probs_;
  std::vector<DensityMatrix> states_;
};

/// chi = S(sum p_i rho_i) - sum p_i S(rho_i), in bits.
double holevo_chi(const Ensemble& ens);

/// log2 d_A + S(rho_B) - S(rho). Raw value; may fall below the unassisted log2 d_A.
double dc_capacity(const DensityMatrix& rho);

/// S(rho_B) - S(rho).
double dc_advantage(const DensityMatrix& rho);

/// max(dc_capacity, log2 d_A): ignoring the shared state is always possible.
double reported_capacity(const DensityMatrix& rho);

/// S(rho_B) - S(rho) > threshold.
bool is_dc(const DensityMatrix& rho, double threshold = kDefaultTol);

/// {1/4, (U (x) I) rho (U (x) I)^dagger} for U in {I, sigma_x, sigma_y, sigma_z}.
/// Throws UnsupportedDimensionError unless d_A = 2.
Ensemble pauli_encoding_ensemble(const DensityMatrix& rho);

/// {p_i, (U_i (x) I) rho (U_i (x) I)^dagger} for arbitrary unitaries on A.
Ensemble unitary_encoding_ensemble(const DensityMatrix& rho,
                                   const std::vector<ComplexMatrix>& unitaries,
                                   const std::vector<double>& probs);

struct ProtocolOutcome {
  int decoded = -1;
  std::vector<double> bell_probabilities;  // over the decoding table order, messages 0..3
};

/// Ideal dense-coding round on a fresh singlet: sigma_x -> 0, sigma_y -> 1,
/// sigma_z -> 2, I -> 3; Bob measures in the Bell basis.
/// Throws DomainError for messages outside {0, 1, 2, 3}.
ProtocolOutcome run_protocol(int message);
int simulate_protocol(int message);

enum class ClassLabel { Sep, SepOrBound, PptEnt, NptNonDc, Dc };

std::string_view to_string(ClassLabel label);

struct ClassificationReport {
  CriterionVerdict ppt;
  CriterionVerdict majorization;
  CriterionVerdict entropy;
  std::optional<double> witness_value;
  double dc_advantage = 0.0;
  double capacity = 0.0;  // reported_capacity
  ClassLabel class_label = ClassLabel::SepOrBound;

  bool entangled_certified() const {
    return class_label == ClassLabel::Dc || class_label == ClassLabel::NptNonDc ||
           class_label == ClassLabel::PptEnt;
  }
};

/// Runs the PPT, majorization and entropy tests and the DC condition, then
/// assigns DC > NPT_NONDC > SEP (2x2, 2x3 only) > SEP_or_BOUND. A supplied
/// witness with negative value upgrades SEP_or_BOUND to PPT_ENT.
ClassificationReport classify(const DensityMatrix& rho, double tol = kDefaultTol,
                              const Witness* witness = nullptr);

}  // namespace entangle
