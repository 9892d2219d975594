#include <doctest.h>

#include <cmath>

#include "entangle/linalg.hpp"
#include "entangle/states.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace entangle;

namespace {

ComplexMatrix singlet_projector() {
  return projector(bell_state(BellKind::PsiMinus)).matrix();
}

}  // namespace

TEST_CASE("kron of identities and Paulis") {
  CHECK(max_norm(kron(identity(2), identity(2)) - identity(4)) == 0.0);

  const ComplexMatrix xz = kron(pauli_x(), pauli_z());
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(0, 2) = 1.0;
  expected(1, 3) = -1.0;
  expected(2, 0) = 1.0;
  expected(3, 1) = -1.0;
  CHECK(max_norm(xz - expected) == 0.0);
}

TEST_CASE("kron matches nested loops and is associative") {
  std::mt19937_64 rng(11);
  const ComplexMatrix a = testing::random_matrix(3, 2, rng);
  const ComplexMatrix b = testing::random_matrix(2, 4, rng);
  CHECK(max_norm(kron(a, b) - oracle::nested_kron(a, b)) == 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix x = testing::random_matrix(2, 3, rng);
    const ComplexMatrix y = testing::random_matrix(3, 2, rng);
    const ComplexMatrix z = testing::random_matrix(2, 2, rng);
    CHECK(max_norm(kron(kron(x, y), z) - kron(x, kron(y, z))) <= 1e-12);
  }
}

TEST_CASE("partial transpose of the singlet") {
  const BipartiteDims d(2, 2);
  const ComplexMatrix pt = partial_transpose(singlet_projector(), d, Subsystem::A);
  const auto ev = oracle::jacobi_eigenvalues(pt);
  CHECK(ev[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(-0.5).epsilon(1e-12));

  const RealVector eig = eigh(pt).eigenvalues;
  for (int i = 0; i < 4; ++i) CHECK(std::abs(eig(i) - ev[static_cast<std::size_t>(i)]) <= 1e-12);
}

TEST_CASE("partial transpose of a product projector conjugates the A factor") {
  std::mt19937_64 rng(3);
  const ComplexVector e = random_unit_vector(3, rng);
  const ComplexVector f = random_unit_vector(2, rng);
  const ComplexMatrix rho = kron(outer(e, e), outer(f, f));
  const ComplexVector ec = e.conjugate();
  const ComplexMatrix pt = partial_transpose(rho, BipartiteDims(3, 2), Subsystem::A);
  CHECK(max_norm(pt - kron(outer(ec, ec), outer(f, f))) <= 1e-15);
  CHECK(eigh(pt).eigenvalues.minCoeff() >= -1e-12);
}

TEST_CASE("partial transpose is an exact involution and preserves the trace") {
  std::mt19937_64 rng(5);
  for (const auto& d : {BipartiteDims(2, 3), BipartiteDims(3, 3), BipartiteDims(4, 2)}) {
    const ComplexMatrix m = testing::random_hermitian(d.total(), rng);
    for (auto s : {Subsystem::A, Subsystem::B}) {
      const ComplexMatrix once = partial_transpose(m, d, s);
      CHECK(max_norm(partial_transpose(once, d, s) - m) == 0.0);
      CHECK(once.trace() == m.trace());
      CHECK(is_hermitian(once, 1e-14));
    }
    // T_A followed by T_B is the full transpose.
    const ComplexMatrix full = partial_transpose(partial_transpose(m, d, Subsystem::A), d, Subsystem::B);
    CHECK(max_norm(full - m.transpose()) == 0.0);
  }
}

TEST_CASE("partial transpose spectrum is local-basis independent") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteDims d(2, 3);
    const ComplexMatrix rho = testing::random_hermitian(d.total(), rng);
    const ComplexMatrix u = kron(random_unitary(2, rng), random_unitary(3, rng));
    const ComplexMatrix rotated = u * rho * u.adjoint();
    const RealVector a = eigvalsh(partial_transpose(rho, d, Subsystem::A));
    const RealVector b = eigvalsh(partial_transpose(rotated, d, Subsystem::A), 1e-8);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("partial transpose moves across the trace: tr(rho^{T_A} sigma) = tr(rho sigma^{T_A})") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const BipartiteDims d(3, 2);
    const ComplexMatrix rho = testing::random_hermitian(6, rng);
    const ComplexMatrix sigma = testing::random_hermitian(6, rng);
    const cplx lhs = hs_inner(partial_transpose(rho, d, Subsystem::A), sigma);
    const cplx rhs = hs_inner(rho, partial_transpose(sigma, d, Subsystem::A));
    CHECK(std::abs(lhs - rhs) <= 1e-10);
  }
}

TEST_CASE("partial trace") {
  const BipartiteDims d(2, 2);
  CHECK(max_norm(partial_trace(singlet_projector(), d, Subsystem::A) - identity(2) / 2.0) <= 1e-15);

  std::mt19937_64 rng(17);
  const ComplexVector e = random_unit_vector(2, rng);
  const ComplexVector f = random_unit_vector(2, rng);
  CHECK(max_norm(partial_trace(kron(outer(e, e), outer(f, f)), d, Subsystem::B) - outer(f, f)) <=
        1e-15);

  const DensityMatrix ra = random_density(BipartiteDims(3, 1), 3, 21);
  const DensityMatrix rb = random_density(BipartiteDims(2, 1), 2, 22);
  const ComplexMatrix prod = kron(ra.matrix(), rb.matrix());
  const BipartiteDims d32(3, 2);
  CHECK(max_norm(partial_trace(prod, d32, Subsystem::A) - ra.matrix()) <= 1e-12);
  CHECK(max_norm(partial_trace(prod, d32, Subsystem::B) - rb.matrix()) <= 1e-12);

  const ComplexMatrix h = testing::random_hermitian(12, rng);
  const BipartiteDims d43(4, 3);
  for (auto keep : {Subsystem::A, Subsystem::B}) {
    const ComplexMatrix r = partial_trace(h, d43, keep);
    CHECK(std::abs(r.trace() - h.trace()) <= 1e-12);
    CHECK(is_hermitian(r, 1e-12));
  }
}

TEST_CASE("dimension errors") {
  const ComplexMatrix m = identity(5);
  CHECK_THROWS_AS(partial_transpose(m, BipartiteDims(2, 2), Subsystem::A), DimensionError);
  CHECK_THROWS_AS(partial_trace(m, BipartiteDims(2, 3), Subsystem::B), DimensionError);
  CHECK_THROWS_AS(hs_inner(identity(2), identity(3)), DimensionError);
  CHECK_THROWS_AS(BipartiteDims(0, 2), DimensionError);
  CHECK_THROWS_AS(BipartiteDims(2, -1), DimensionError);
}

TEST_CASE("eigh") {
  CHECK(eigh(identity(4)).eigenvalues.isApprox(RealVector::Ones(4)));
  const Spectrum z = eigh(pauli_z());
  CHECK(z.eigenvalues(0) == 1.0);
  CHECK(z.eigenvalues(1) == -1.0);

  ComplexMatrix bad = identity(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(bad), ValidationError);

  std::mt19937_64 rng(23);
  for (int n : {2, 5, 9}) {
    const ComplexMatrix h = testing::random_hermitian(n, rng);
    const Spectrum s = eigh(h);
    for (int i = 1; i < n; ++i) CHECK(s.eigenvalues(i - 1) >= s.eigenvalues(i));
    for (int i = 0; i < n; ++i) {
      const double resid = (h * s.eigenvectors.col(i) - s.eigenvalues(i) * s.eigenvectors.col(i)).norm();
      CHECK(resid <= 1e-9 * max_norm(h) * n);
    }
    CHECK(max_norm(s.eigenvectors.adjoint() * s.eigenvectors - identity(n)) <= 1e-9);
    // Deterministic for fixed input.
    CHECK(eigh(h).eigenvectors == s.eigenvectors);
  }
}

TEST_CASE("svd") {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  const SvdResult s = svd(d);
  CHECK(s.singular_values(0) == doctest::Approx(3.0));
  CHECK(s.singular_values(1) == doctest::Approx(1.0));

  ComplexMatrix c = ComplexMatrix::Zero(2, 2);
  c(0, 1) = 1.0 / std::sqrt(2.0);
  c(1, 0) = -1.0 / std::sqrt(2.0);
  const SvdResult cs = svd(c);
  CHECK(std::abs(cs.singular_values(0) - 1.0 / std::sqrt(2.0)) <= 1e-15);
  CHECK(std::abs(cs.singular_values(1) - 1.0 / std::sqrt(2.0)) <= 1e-15);

  CHECK(svd(ComplexMatrix::Zero(3, 2)).singular_values.isZero());

  std::mt19937_64 rng(29);
  const ComplexMatrix m = testing::random_matrix(4, 3, rng);
  const SvdResult ms = svd(m);
  const ComplexMatrix rebuilt = ms.u * ms.singular_values.asDiagonal() * ms.v.adjoint();
  CHECK(max_norm(m - rebuilt) <= 1e-9 * max_norm(m) * 4);
  CHECK(max_norm(ms.u.adjoint() * ms.u - identity(3)) <= 1e-12);
  CHECK(max_norm(ms.v.adjoint() * ms.v - identity(3)) <= 1e-12);
}

TEST_CASE("Hilbert-Schmidt inner product") {
  CHECK(hs_inner(identity(2), identity(2)) == cplx(2.0));
  CHECK(std::abs(hs_inner(pauli_x(), pauli_y())) == 0.0);
  std::mt19937_64 rng(31);
  const ComplexMatrix a = testing::random_matrix(3, 4, rng);
  const ComplexMatrix b = testing::random_matrix(3, 4, rng);
  CHECK(std::abs(hs_inner(a, b) - oracle::elementwise_inner(a, b)) <= 1e-12);
  CHECK(std::abs(hs_inner(a, b) - (a.adjoint() * b).trace()) <= 1e-12);
}
