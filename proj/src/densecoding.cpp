#include "entangle/densecoding.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace entangle {

Ensemble::Ensemble(std::vector<double> probs, std::vector<DensityMatrix> states)
    : probs_(std::move(probs)), states_(std::move(states)) {
  if (probs_.empty()) throw DomainError("Ensemble: empty ensemble");
  if (probs_.size() != states_.size()) {
    throw DimensionError("Ensemble: need one probability per state");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("Ensemble: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kDefaultTol) {
    throw DomainError("Ensemble: probabilities do not sum to 1");
  }
  for (const auto& s : states_) {
    if (s.dims() != states_.front().dims()) {
      throw DimensionError("Ensemble: states have different dims");
    }
  }
}

ComplexMatrix Ensemble::average() const {
  ComplexMatrix avg = ComplexMatrix::Zero(states_.front().dim(), states_.front().dim());
  for (std::size_t i = 0; i < probs_.size(); ++i) avg += probs_[i] * states_[i].matrix();
  return avg;
}

double holevo_chi(const Ensemble& ens) {
  double mean_entropy = 0.0;
  for (std::size_t i = 0; i < ens.probs().size(); ++i) {
    mean_entropy += ens.probs()[i] * von_neumann_entropy(ens.states()[i]);
  }
  return von_neumann_entropy(ens.average()) - mean_entropy;
}

double dc_advantage(const DensityMatrix& rho) {
  return von_neumann_entropy(partial_trace(rho.matrix(), rho.dims(), Subsystem::B)) -
         von_neumann_entropy(rho);
}

double dc_capacity(const DensityMatrix& rho) {
  return std::log2(static_cast<double>(rho.dims().d_a())) + dc_advantage(rho);
}

double reported_capacity(const DensityMatrix& rho) {
  return std::max(dc_capacity(rho), std::log2(static_cast<double>(rho.dims().d_a())));
}

bool is_dc(const DensityMatrix& rho, double threshold) {
  return dc_advantage(rho) > threshold;
}

Ensemble unitary_encoding_ensemble(const DensityMatrix& rho,
                                   const std::vector<ComplexMatrix>& unitaries,
                                   const std::vector<double>& probs) {
  std::vector<DensityMatrix> states;
  states.reserve(unitaries.size());
  const ComplexMatrix id_b = identity(rho.dims().d_b());
  for (const auto& u : unitaries) {
    if (u.rows() != rho.dims().d_a() || u.cols() != rho.dims().d_a()) {
      throw DimensionError("unitary_encoding_ensemble: unitary does not act on A");
    }
    states.push_back(apply_local_unitaries(rho, u, id_b));
  }
  return Ensemble(probs, std::move(states));
}

Ensemble pauli_encoding_ensemble(const DensityMatrix& rho) {
  if (rho.dims().d_a() != 2) {
    throw UnsupportedDimensionError("pauli_encoding_ensemble: encoding side must be a qubit");
  }
  return unitary_encoding_ensemble(rho, {identity(2), pauli_x(), pauli_y(), pauli_z()},
                                   {0.25, 0.25, 0.25, 0.25});
}

ProtocolOutcome run_protocol(int message) {
  if (message < 0 || message > 3) {
    throw DomainError("simulate_protocol: message must be 0, 1, 2 or 3");
  }
  // Agreed encoding table, indexed by message.
  const std::array<ComplexMatrix, 4> encoding{pauli_x(), pauli_y(), pauli_z(), identity(2)};
  // sigma_x|psi-> = -|phi->, sigma_y|psi-> = i|phi+>, sigma_z|psi-> = |psi+>, I|psi-> = |psi->.
  const std::array<BellKind, 4> decoding{BellKind::PhiMinus, BellKind::PhiPlus, BellKind::PsiPlus,
                                         BellKind::PsiMinus};
  const ComplexVector singlet = bell_state(BellKind::PsiMinus).amplitudes();
  const ComplexVector sent = kron(encoding[static_cast<std::size_t>(message)], identity(2)) * singlet;

  ProtocolOutcome out;
  out.bell_probabilities.resize(4);
  double best = -1.0;
  for (int k = 0; k < 4; ++k) {
    const ComplexVector beta = bell_state(decoding[static_cast<std::size_t>(k)]).amplitudes();
    const double prob = std::norm(beta.dot(sent));
    out.bell_probabilities[static_cast<std::size_t>(k)] = prob;
    if (prob > best) {
      best = prob;
      out.decoded = k;
    }
  }
  return out;
}

int simulate_protocol(int message) {
  return run_protocol(message).decoded;
}

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::Sep:
      return "SEP";
    case ClassLabel::SepOrBound:
      return "SEP_or_BOUND";
    case ClassLabel::PptEnt:
      return "PPT_ENT";
    case ClassLabel::NptNonDc:
      return "NPT_NONDC";
    case ClassLabel::Dc:
      return "DC";
  }
  return "UNKNOWN";
}

ClassificationReport classify(const DensityMatrix& rho, double tol, const Witness* witness) {
  ClassificationReport r;
  r.ppt = ppt_test(rho, tol);
  r.majorization = majorization_test(rho, tol);
  r.entropy = entropy_test(rho, tol);
  r.dc_advantage = dc_advantage(rho);
  r.capacity = reported_capacity(rho);
  if (witness != nullptr) r.witness_value = witness_value(*witness, rho);

  if (r.dc_advantage > tol) {
    r.class_label = ClassLabel::Dc;
  } else if (r.ppt.violated) {
    r.class_label = ClassLabel::NptNonDc;
  } else if (r.ppt.separable_certified) {
    r.class_label = ClassLabel::Sep;
  } else if (r.witness_value && *r.witness_value < -tol) {
    r.class_label = ClassLabel::PptEnt;
  } else {
    r.class_label = ClassLabel::SepOrBound;
  }
  return r;
}

}  // namespace entangle
