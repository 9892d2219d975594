#pragma once

#include <span>
#include <vector>

#include "entangle/densecoding.hpp"

namespace entangle {

/// Classifies every state; OpenMP parallel over the batch. Output order matches input.
std::vector<ClassificationReport> classify_batch(std::span<const DensityMatrix> states,
                                                 double tol = kDefaultTol);

/// Minimum partial-transpose eigenvalue of every state, in parallel.
std::vector<double> ppt_margins(std::span<const DensityMatrix> states);

}  // namespace entangle

namespace entangle::reference {

std::vector<ClassificationReport> classify_batch(std::span<const DensityMatrix> states,
                                                 double tol = kDefaultTol);
std::vector<double> ppt_margins(std::span<const DensityMatrix> states);

}  // namespace entangle::reference
