#include "entangle/reference.hpp"

namespace entangle::reference {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const BipartiteDims& dims,
                                Subsystem subsystem) {
  if (rho.rows() != dims.total() || rho.cols() != dims.total()) {
    throw DimensionError("reference::partial_transpose: dimension mismatch");
  }
  const int db = dims.d_b();
  ComplexMatrix out(rho.rows(), rho.cols());
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      const int i = static_cast<int>(r) / db, mu = static_cast<int>(r) % db;
      const int j = static_cast<int>(c) / db, nu = static_cast<int>(c) % db;
      if (subsystem == Subsystem::A) {
        out(r, c) = rho(j * db + mu, i * db + nu);
      } else {
        out(r, c) = rho(i * db + nu, j * db + mu);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const BipartiteDims& dims, Subsystem keep) {
  if (rho.rows() != dims.total() || rho.cols() != dims.total()) {
    throw DimensionError("reference::partial_trace: dimension mismatch");
  }
  const int da = dims.d_a();
  const int db = dims.d_b();
  const int dk = keep == Subsystem::A ? da : db;
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < da; ++j)
      for (int mu = 0; mu < db; ++mu)
        for (int nu = 0; nu < db; ++nu) {
          const cplx v = rho(i * db + mu, j * db + nu);
          if (keep == Subsystem::A && mu == nu) out(i, j) += v;
          if (keep == Subsystem::B && i == j) out(mu, nu) += v;
        }
  return out;
}

}  // namespace entangle::reference
