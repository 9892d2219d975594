// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entangle/entangle.hpp"
#include "oracles.hpp"

using namespace entangle;

namespace {

const double kTsirelson = 2.0 * std::sqrt(2.0);

// Empty string means pass; otherwise the first counterexample found.
using Check = std::function<std::string()>;

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

const BipartiteDims kDims[] = {BipartiteDims(2, 2), BipartiteDims(2, 3), BipartiteDims(3, 3)};

DensityMatrix singlet() { return projector(bell_state(BellKind::PsiMinus)); }

ComplexMatrix random_psd(int n, Rng& rng) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = {g(rng), g(rng)};
  return m * m.adjoint() / static_cast<double>(n);
}

std::string singlet_pt() {
  const auto ev = oracle::jacobi_eigenvalues(oracle::partial_transpose_b(singlet().matrix(), 2, 2));
  const double lib = ppt_test(singlet()).margin;
  if (std::abs(ev.back() + 0.5) > 1e-10) return fmt("oracle min eigenvalue %.15g", ev.back());
  if (std::abs(lib + 0.5) > 1e-10) return fmt("library margin %.15g", lib);
  return {};
}

std::string werner_ppt_threshold() {
  for (double p : {0.0, 0.2, 0.5, 1.0}) {
    const double lib = ppt_test(werner(p)).margin;
    if (std::abs(lib - oracle::werner_pt_margin(p)) > 1e-12) return fmt("margin at p=%g is %.15g", p, lib);
  }
  const double root = oracle::bisect([](double p) { return ppt_test(werner(p)).margin; }, 0.0, 1.0, 1e-12);
  if (std::abs(root - 1.0 / 3.0) > 1e-9) return fmt("crossing at %.15g", root);
  return {};
}

std::string canonical_witness() {
  const double v = witness_value(canonical_witness_2x2(), singlet());
  if (std::abs(v + 0.5) > 1e-12) return fmt("tr(W rho) = %.15g", v);
  return {};
}

std::string chsh_singlet() {
  const ChshOptimum best = maximize_chsh(singlet());
  if (std::abs(best.value - kTsirelson) > 1e-6) return fmt("value %.12g", best.value);
  const double angle = coplanarity_angle(best.setting);
  if (angle > 1e-3) return fmt("directions %.3g rad out of plane", angle);
  return {};
}

std::string singlet_capacity() {
  const double c = dc_capacity(singlet());
  if (std::abs(c - 2.0) > 1e-12) return fmt("capacity %.15g", c);
  return {};
}

std::string achievability() {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DensityMatrix rho = random_density(BipartiteDims(2, 2), 1 + static_cast<int>(seed % 4), seed);
    const double chi = holevo_chi(pauli_encoding_ensemble(rho));
    const double cap = dc_capacity(rho);
    if (std::abs(chi - cap) > 1e-9) return fmt("seed %llu: chi %.12g vs capacity %.12g", (unsigned long long)seed, chi, cap);
  }
  return {};
}

std::string separable_soundness() {
  Rng rng(2024);
  const Witness canonical = canonical_witness_2x2();
  for (const BipartiteDims& d : kDims) {
    std::vector<Witness> decomposable;
    for (int i = 0; i < 3; ++i) {
      decomposable.push_back(decomposable_witness(random_psd(d.total(), rng), random_psd(d.total(), rng), d));
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const DensityMatrix rho = random_separable(d, std::nullopt, seed);
      const auto where = [&](const char* what) {
        return fmt("%dx%d seed %llu: %s", d.d_a(), d.d_b(), (unsigned long long)seed, what);
      };
      if (ppt_test(rho).violated) return where("ppt");
      if (majorization_test(rho).violated) return where("majorization");
      if (entropy_test(rho).violated) return where("entropy");
      for (const Witness& w : decomposable)
        if (witness_value(w, rho) < -1e-8) return where("decomposable witness");
      if (d == BipartiteDims(2, 2)) {
        if (witness_value(canonical, rho) < -1e-8) return where("canonical witness");
        if (maximize_chsh(rho, {.seed = seed}).value > 2.0 + 1e-5) return where("chsh");
      }
    }
  }
  return {};
}

std::string hierarchy() {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const BipartiteDims d = kDims[seed % 3];
    const int rank = 1 + static_cast<int>((seed / 3) % d.total());
    const DensityMatrix rho = random_density(d, rank, 5000 + seed);
    const bool maj = majorization_test(rho).violated;
    if (maj && !ppt_test(rho).violated) return fmt("seed %llu: majorization without ppt", (unsigned long long)seed);
    if (!maj && entropy_test(rho).violated) return fmt("seed %llu: entropy without majorization", (unsigned long long)seed);
  }
  return {};
}

std::string single_negative_eigenvalue() {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const DensityMatrix rho = random_density(BipartiteDims(2, 2), 1 + static_cast<int>(seed % 4), 9000 + seed);
    const RealVector ev = eigvalsh(partial_transpose(rho.matrix(), rho.dims(), Subsystem::A));
    if ((ev.array() < -1e-9).count() > 1) return fmt("seed %llu", (unsigned long long)seed);
  }
  return {};
}

std::string schmidt_consistency() {
  const BipartiteDims shapes[] = {BipartiteDims(2, 2), BipartiteDims(3, 2), BipartiteDims(4, 3)};
  for (const BipartiteDims& d : shapes) {
    Rng rng(d.total());
    for (int trial = 0; trial < 200; ++trial) {
      const PureState psi = random_pure(d, rng);
      const SchmidtDecomposition s = schmidt(psi);
      const DensityMatrix rho = projector(psi);
      for (Subsystem side : {Subsystem::A, Subsystem::B}) {
        const auto ev = oracle::jacobi_eigenvalues(rho.reduced(side).matrix());
        for (std::size_t i = 0; i < ev.size(); ++i) {
          const double c = i < static_cast<std::size_t>(s.rank()) ? s.coefficients(i) * s.coefficients(i) : 0.0;
          if (std::abs(c - ev[i]) > 1e-9) return fmt("%dx%d trial %d: coefficient %zu", d.d_a(), d.d_b(), trial, i);
        }
      }
      const double err = (s.reconstruct() - psi.amplitudes()).cwiseAbs().maxCoeff();
      if (err > 1e-9) return fmt("%dx%d trial %d: reconstruction error %.3g", d.d_a(), d.d_b(), trial, err);
    }
  }
  return {};
}

std::string jamiolkowski() {
  Rng rng(11);
  std::normal_distribution<double> g;
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 50; ++trial) {
      ComplexMatrix m(d * d, d * d);
      for (int i = 0; i < d * d; ++i)
        for (int j = 0; j < d * d; ++j) m(i, j) = {g(rng), g(rng)};
      const ComplexMatrix e = 0.5 * (m + m.adjoint());
      const LinearMap map(e, d, d);
      const LinearMap back = choi_from_map([&](const ComplexMatrix& x) { return map_from_choi(map, x); }, d);
      const double err = (back.choi() - e).cwiseAbs().maxCoeff();
      if (err > 1e-10) return fmt("d=%d trial %d: error %.3g", d, trial, err);
    }
    if (is_completely_positive(transpose_map(d))) return fmt("transposition CP for d=%d", d);
    if (!is_completely_positive(unitary_conjugation_map(random_unitary(d, rng))))
      return fmt("unitary conjugation not CP for d=%d", d);
  }
  return {};
}

std::string protocol() {
  // sigma_x, sigma_y, sigma_z, I on Alice's half of the singlet, read off
  // against Bob's decoding basis by explicit overlaps.
  const ComplexMatrix ops[4] = {pauli_x(), pauli_y(), pauli_z(), identity(2)};
  const BellKind decode[4] = {BellKind::PhiMinus, BellKind::PhiPlus, BellKind::PsiPlus, BellKind::PsiMinus};
  const ComplexVector psi = bell_state(BellKind::PsiMinus).amplitudes();
  for (int m = 0; m < 4; ++m) {
    const ComplexVector sent = oracle::nested_kron(ops[m], identity(2)) * psi;
    int expected = -1;
    for (int k = 0; k < 4; ++k)
      if (std::abs(std::norm(bell_state(decode[k]).amplitudes().dot(sent)) - 1.0) < 1e-12) expected = k;
    if (expected != m) return fmt("message %d maps to Bell state %d", m, expected);
    for (int rep = 0; rep < 3; ++rep)
      if (simulate_protocol(m) != m) return fmt("message %d decoded as %d", m, simulate_protocol(m));
  }
  return {};
}

std::string werner_classes() {
  const std::pair<double, ClassLabel> cases[] = {
      {0.2, ClassLabel::Sep}, {0.5, ClassLabel::NptNonDc}, {0.9, ClassLabel::Dc}};
  if (!(0.9 > oracle::werner_dc_threshold())) return "0.9 below the dense-coding threshold";
  for (const auto& [p, label] : cases) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      Rng rng(seed);
      const DensityMatrix rotated = apply_local_unitaries(werner(p), random_unitary(2, rng), random_unitary(2, rng));
      const ClassLabel got = classify(rotated).class_label;
      if (got != label || classify(werner(p)).class_label != label) {
        return fmt("p=%g seed %llu: got %s", p, (unsigned long long)seed, std::string(to_string(got)).c_str());
      }
    }
  }
  return {};
}

}  // namespace

int main() {
  const std::pair<const char*, Check> criteria[] = {
      {"singlet partial transpose minimum eigenvalue is -1/2", singlet_pt},
      {"Werner PPT margin crosses zero at p = 1/3", werner_ppt_threshold},
      {"canonical witness on the singlet is -1/2", canonical_witness},
      {"maximize_chsh on the singlet reaches 2 sqrt 2 with coplanar directions", chsh_singlet},
      {"singlet dense-coding capacity is 2 bits", singlet_capacity},
      {"Pauli encoding attains the capacity on 100 random states", achievability},
      {"no necessary criterion fires on 3000 random separable states", separable_soundness},
      {"majorization implies PPT, entropy implies majorization on 1000 states", hierarchy},
      {"at most one negative partial-transpose eigenvalue on 1000 two-qubit states", single_negative_eigenvalue},
      {"Schmidt coefficients match reduced spectra on 600 pure states", schmidt_consistency},
      {"operator-map-operator round trip and CP checks", jamiolkowski},
      {"dense-coding protocol decodes all four messages", protocol},
      {"Werner states classify as SEP, NPT_NONDC, DC across 5 seeds", werner_classes},
  };
  int failures = 0;
  int n = 0;
  for (const auto& [description, check] : criteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    try {
      detail = check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (detail.empty()) {
      std::printf("[PASS] %d: %s (%.2fs)\n", n, description, secs);
    } else {
      ++failures;
      std::printf("[FAIL] %d: %s: %s\n", n, description, detail.c_str());
    }
  }
  std::printf("%d/%d criteria passed\n", n - failures, n);
  return failures == 0 ? 0 : 1;
}
