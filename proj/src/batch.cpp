#include "entangle/batch.hpp"
#include "entangle/reference.hpp"

namespace entangle {

std::vector<ClassificationReport> classify_batch(std::span<const DensityMatrix> states,
                                                 double tol) {
  std::vector<ClassificationReport> out(states.size());
  const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = classify(states[static_cast<std::size_t>(i)], tol);
  }
  return out;
}

std::vector<double> ppt_margins(std::span<const DensityMatrix> states) {
  std::vector<double> out(states.size());
  const auto n = static_cast<std::ptrdiff_t>(states.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& rho = states[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] =
        eigvalsh(partial_transpose(rho.matrix(), rho.dims(), Subsystem::A)).minCoeff();
  }
  return out;
}

}  // namespace entangle

namespace entangle::reference {

std::vector<ClassificationReport> classify_batch(std::span<const DensityMatrix> states,
                                                 double tol) {
  std::vector<ClassificationReport> out;
  out.reserve(states.size());
  for (const auto& rho : states) out.push_back(classify(rho, tol));
  return out;
}

std::vector<double> ppt_margins(std::span<const DensityMatrix> states) {
  std::vector<double> out;
  out.reserve(states.size());
  for (const auto& rho : states) {
    out.push_back(
        eigvalsh(reference::partial_transpose(rho.matrix(), rho.dims(), Subsystem::A)).minCoeff());
  }
  return out;
}

}  // namespace entangle::reference
