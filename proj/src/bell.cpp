#include "entangle/bell.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace entangle {

namespace {

void require_two_qubits(const DensityMatrix& rho, const char* op) {
  if (rho.dims() != BipartiteDims(2, 2)) {
    throw DimensionError(std::string(op) + ": requires a two-qubit state");
  }
}

Direction spherical(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

using Angles = std::array<double, 8>;

ChshSetting setting_from(const Angles& x) {
  return {spherical(x[0], x[1]), spherical(x[2], x[3]), spherical(x[4], x[5]),
          spherical(x[6], x[7])};
}

// |a^T T (b + b') + a'^T T (b - b')|.
double objective(const Eigen::Matrix3d& t, const Angles& x) {
  const ChshSetting s = setting_from(x);
  return std::abs(s.a.dot(t * (s.b + s.b_prime)) + s.a_prime.dot(t * (s.b - s.b_prime)));
}

// Derives an independent engine for restart `k` so that restarts can run in any order.
Rng restart_rng(std::uint64_t seed, int k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), 0x43485348u};
  return Rng(seq);
}

struct LocalResult {
  double value;
  Angles angles;
};

// Golden-section maximization of f on [lo, hi]; returns the best abscissa seen.
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
  constexpr double inv_phi = 0.6180339887498949;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 < f2 ? x2 : x1;
}

LocalResult local_search(const Eigen::Matrix3d& t, const ChshSearchOptions& opts, int k) {
  Rng rng = restart_rng(opts.seed, k);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Angles x{};
  for (int i = 0; i < 8; i += 2) {
    x[i] = std::acos(1.0 - 2.0 * unit(rng));  // uniform on the sphere
    x[i + 1] = 2.0 * std::numbers::pi * unit(rng);
  }
  double best = objective(t, x);
  // Per-coordinate search half-width, adapted from the size of the last move.
  Angles width;
  width.fill(std::numbers::pi / 2.0);
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    double largest_move = 0.0;
    for (int i = 0; i < 8; ++i) {
      const double h = width[i];
      const double x0 = x[i];
      auto along = [&](double v) {
        Angles y = x;
        y[i] = v;
        return objective(t, y);
      };
      const double xi = golden_max(along, x0 - h, x0 + h, std::max(opts.step_tol, 1e-3 * h));
      const double fi = along(xi);
      double move = 0.0;
      if (fi > best) {
        move = std::abs(xi - x0);
        x[i] = xi;
        best = fi;
      }
      largest_move = std::max(largest_move, move);
      width[i] = std::clamp(4.0 * move, opts.step_tol, std::numbers::pi / 2.0);
    }
    if (largest_move < opts.step_tol) break;
  }
  return {best, x};
}

ChshOptimum pick_best(const std::vector<LocalResult>& results) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < results.size(); ++k) {
    if (results[k].value > results[best].value) best = k;
  }
  if (results[best].value > 2.0 * std::numbers::sqrt2 + 1e-8) {
    throw NumericalError("maximize_chsh: value above the Tsirelson bound");
  }
  return {results[best].value, setting_from(results[best].angles)};
}

void require_restarts(const ChshSearchOptions& opts) {
  if (opts.restarts < 1) throw DomainError("maximize_chsh: restarts must be positive");
}

}  // namespace

void ChshSetting::validate(double tol) const {
  for (const Direction* d : {&a, &a_prime, &b, &b_prime}) {
    if (!d->allFinite() || std::abs(d->norm() - 1.0) > tol) {
      throw DomainError("ChshSetting: measurement directions must be unit vectors");
    }
  }
}

ComplexMatrix spin_observable(const Direction& n) {
  return n.x() * pauli_x() + n.y() * pauli_y() + n.z() * pauli_z();
}

ChshSetting singlet_optimal_setting() {
  const double h = 1.0 / std::sqrt(2.0);
  return {Direction(0.0, 0.0, 1.0), Direction(1.0, 0.0, 0.0), Direction(h, 0.0, h),
          Direction(-h, 0.0, h)};
}

Eigen::Matrix3d correlation_matrix(const DensityMatrix& rho) {
  require_two_qubits(rho, "correlation_matrix");
  const std::array<ComplexMatrix, 3> paulis{pauli_x(), pauli_y(), pauli_z()};
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t(i, j) = hs_inner(kron(paulis[i], paulis[j]), rho.matrix()).real();
  return t;
}

double correlator(const DensityMatrix& rho, const Direction& a, const Direction& b) {
  require_two_qubits(rho, "correlator");
  const ComplexMatrix obs = kron(spin_observable(a), spin_observable(b));
  return (rho.matrix() * obs).trace().real();
}

ComplexMatrix chsh_operator(const ChshSetting& s) {
  s.validate();
  const ComplexMatrix sa = spin_observable(s.a);
  const ComplexMatrix sap = spin_observable(s.a_prime);
  const ComplexMatrix sb = spin_observable(s.b);
  const ComplexMatrix sbp = spin_observable(s.b_prime);
  return kron(sa, sb) + kron(sa, sbp) + kron(sap, sb) - kron(sap, sbp);
}

double chsh_value(const DensityMatrix& rho, const ChshSetting& s) {
  require_two_qubits(rho, "chsh_value");
  s.validate();
  return correlator(rho, s.a, s.b) + correlator(rho, s.a, s.b_prime) +
         correlator(rho, s.a_prime, s.b) - correlator(rho, s.a_prime, s.b_prime);
}

ChshOptimum maximize_chsh(const DensityMatrix& rho, const ChshSearchOptions& opts) {
  require_restarts(opts);
  const Eigen::Matrix3d t = correlation_matrix(rho);
  std::vector<LocalResult> results(static_cast<std::size_t>(opts.restarts));
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < opts.restarts; ++k) {
    results[static_cast<std::size_t>(k)] = local_search(t, opts, k);
  }
  return pick_best(results);
}

ChshOptimum maximize_chsh_serial(const DensityMatrix& rho, const ChshSearchOptions& opts) {
  require_restarts(opts);
  const Eigen::Matrix3d t = correlation_matrix(rho);
  std::vector<LocalResult> results;
  results.reserve(static_cast<std::size_t>(opts.restarts));
  for (int k = 0; k < opts.restarts; ++k) results.push_back(local_search(t, opts, k));
  return pick_best(results);
}

double coplanarity_angle(const ChshSetting& s) {
  Eigen::Matrix<double, 3, 4> m;
  m << s.a, s.a_prime, s.b, s.b_prime;
  Eigen::JacobiSVD<Eigen::Matrix<double, 3, 4>> dec(m, Eigen::ComputeFullU);
  const Direction normal = dec.matrixU().col(2);
  double worst = 0.0;
  for (int c = 0; c < 4; ++c) {
    const double sine = std::abs(normal.dot(m.col(c))) / m.col(c).norm();
    worst = std::max(worst, std::asin(std::min(1.0, sine)));
  }
  return worst;
}

}  // namespace entangle
