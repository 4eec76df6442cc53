// Copyright 2026 The qstransfer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qst/fidelity.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <thread>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>

#include "qst/errors.hpp"

namespace qst {

using cplx = std::complex<double>;

OutputQubitState output_qubit_state(const OutputSignature& sig, double theta,
                                    double phi) {
  const double s2 = std::pow(std::sin(theta / 2.0), 2);
  const cplx coh = sig.sigma * std::sin(theta) * std::polar(1.0, phi);
  OutputQubitState out;
  out.matrix << 1.0 - sig.rho * s2, std::conj(coh), coh, sig.rho * s2;
  return out;
}

OutputQubitState output_qubit_state(const ReducedState& state, int o) {
  if (o < 1 || o > state.n_qubits()) {
    throw UsageError("output index out of range");
  }
  const cplx excited = state.excitation_block(o - 1, o - 1);
  const cplx coh = state.coherence(o - 1);
  OutputQubitState out;
  out.matrix << state.trace() - excited.real(), std::conj(coh), coh,
      excited.real();
  return out;
}

void OutputUnitary::validate() const {
  if (std::abs(std::norm(u) + std::norm(v) - 1.0) > 1e-12) {
    throw UsageError("output unitary needs |u|^2 + |v|^2 = 1");
  }
}

Eigen::Matrix2cd OutputUnitary::matrix() const {
  Eigen::Matrix2cd m;
  m << u, v, -std::conj(v), std::conj(u);
  return m;
}

OutputUnitary OutputUnitary::phase(cplx u) {
  return {u / std::abs(u), 0.0};
}

double single_input_fidelity(const OutputQubitState& out, double theta,
                             double phi, const OutputUnitary& unitary) {
  unitary.validate();
  Eigen::Vector2cd psi;
  psi << std::cos(theta / 2.0), std::sin(theta / 2.0) * std::polar(1.0, phi);
  const Eigen::Matrix2cd v = unitary.matrix();
  const cplx f = psi.dot(v * out.matrix * v.adjoint() * psi);
  return f.real();
}

double average_fidelity(const OutputSignature& sig, cplx u) {
  if (std::abs(u) > 1.0 + 1e-12) throw UsageError("|u| must not exceed 1");
  const double cross = 2.0 * (sig.sigma * std::conj(u) * std::conj(u)).real();
  return 0.5 + (2.0 * sig.rho * std::norm(u) + 2.0 * cross - sig.rho) / 6.0;
}

cplx optimal_u(const OutputSignature& sig) {
  if (sig.sigma == cplx(0.0, 0.0)) return {1.0, 0.0};
  return std::polar(1.0, std::arg(sig.sigma) / 2.0);
}

double optimal_average_fidelity(const OutputSignature& sig) {
  if (sig.rho < -1e-12) {
    throw InvariantViolation("negative transferred population " +
                             std::to_string(sig.rho));
  }
  return 0.5 + (sig.rho + 4.0 * std::abs(sig.sigma)) / 6.0;
}

OutputSignature output_signature(const ChainSpec& spec, double t) {
  return SignatureTracker(spec).at(t);
}

OutputSignature signature_from_reference_state(const ReducedState& state,
                                               int o) {
  if (o < 1 || o > state.n_qubits()) {
    throw UsageError("output index out of range");
  }
  return {2.0 * state.excitation_block(o - 1, o - 1).real(),
          state.coherence(o - 1)};
}

SignatureTracker::SignatureTracker(const ChainSpec& spec)
    : propagator_(spec), output_(output_index(spec)) {}

OutputSignature SignatureTracker::at(double t) const {
  const cplx psi_o = propagator_.amplitude(t)(output_ - 1);
  return {std::norm(psi_o), 0.5 * psi_o};
}

double SignatureTracker::fidelity(double t) const {
  return optimal_average_fidelity(at(t));
}

double SignatureTracker::fidelity_slope(double t) const {
  const Eigen::VectorXcd psi = propagator_.amplitude(t);
  const cplx dpsi_o = propagator_.derivative(psi)(output_ - 1);
  return (std::conj(psi(output_ - 1)) * dpsi_o).real();
}

double default_t_max(const ChainSpec& spec) {
  const double xi = std::abs(spec.coupling());
  const double gamma = spec.rate();
  if (xi > 0.0) return 10.0 / xi + 5.0 / std::max(gamma, xi);
  if (gamma > 0.0) return 15.0 / gamma;
  return 1.0;
}

namespace {

// Locates the maximum of F inside [a, b], which brackets a grid maximum.
double refine_maximum(const SignatureTracker& tracker, double a, double b,
                      double t_tol) {
  const double sa = tracker.fidelity_slope(a);
  const double sb = tracker.fidelity_slope(b);
  if (sa > 0.0 && sb < 0.0) {
    // F rises then falls: the maximum is the sign change of dF/dt.
    auto slope = [&tracker](double t) { return tracker.fidelity_slope(t); };
    std::uintmax_t iterations = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(
        slope, a, b, sa, sb,
        [t_tol](double x, double y) { return std::abs(y - x) <= t_tol; },
        iterations);
    const double mid = 0.5 * (lo + hi);
    // Compare with the bracket ends in case the slope has a kink (psi_o = 0).
    double best = mid;
    for (double t : {lo, hi}) {
      if (tracker.fidelity(t) > tracker.fidelity(best)) best = t;
    }
    return best;
  }
  std::uintmax_t iterations = 200;
  const auto [t, neg_f] = boost::math::tools::brent_find_minima(
      [&tracker](double t) { return -tracker.fidelity(t); }, a, b,
      std::numeric_limits<double>::digits / 2, iterations);
  (void)neg_f;
  return t;
}

}  // namespace

FidelityResult max_fidelity(const ChainSpec& spec, std::optional<double> t_max,
                            int n_grid) {
  const double horizon = t_max.value_or(default_t_max(spec));
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    throw UsageError("t_max must be positive and finite");
  }
  if (n_grid < 100) throw UsageError("n_grid must be at least 100");

  const SignatureTracker tracker(spec);
  FidelityResult result;
  result.times.resize(n_grid);
  result.fidelity.resize(n_grid);
  const double dt = horizon / (n_grid - 1);
  for (int i = 0; i < n_grid; ++i) {
    const double t = i == n_grid - 1 ? horizon : i * dt;
    result.times[i] = t;
    result.fidelity[i] = tracker.fidelity(t);
  }

  const auto& f = result.fidelity;
  const auto best_it = std::max_element(f.begin(), f.end());
  const double grid_best = *best_it;
  double t_star = result.times[best_it - f.begin()];
  double f_star = grid_best;

  const double t_tol = 1e-10 / spec.energy_scale();
  const double threshold = grid_best * (1.0 - 1e-3);
  for (int i = 1; i + 1 < n_grid; ++i) {
    if (f[i] < threshold || f[i] < f[i - 1] || f[i] < f[i + 1]) continue;
    const double t =
        refine_maximum(tracker, result.times[i - 1], result.times[i + 1], t_tol);
    const double value = tracker.fidelity(t);
    if (value > f_star) {
      f_star = value;
      t_star = t;
    }
  }

  result.t_star = t_star;
  result.f_max = f_star;
  result.signature_at_max = tracker.at(t_star);
  result.u_opt = optimal_u(result.signature_at_max);
  return result;
}

std::vector<SweepRow> sweep(std::span<const ChainSpec> specs,
                            std::optional<double> t_max, int n_grid,
                            unsigned threads) {
  std::vector<SweepRow> rows;
  rows.reserve(specs.size());
  for (const ChainSpec& s : specs) rows.push_back(SweepRow{s, 0.0, 0.0, {}});

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        const FidelityResult r = max_fidelity(rows[i].spec, t_max, n_grid);
        rows[i].t_star = r.t_star;
        rows[i].f_max = r.f_max;
      } catch (const std::exception& e) {
        rows[i].error = e.what();
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(rows.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  return rows;
}

}  // namespace qst
