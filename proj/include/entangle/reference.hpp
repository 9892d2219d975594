#pragma once

// Serial reference implementations of the OpenMP kernels in linalg.hpp and
// batch.hpp. They are kept deliberately plain and are used by the test suite
// and the benchmarks as the ground truth for the parallel versions.

#include "entangle/linalg.hpp"

namespace entangle::reference {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims,
                                Subsystem subsystem);
ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteDims& dims, Subsystem keep);

}  // namespace entangle::reference
