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

#include "qst/reduced_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qst/errors.hpp"
#include "qst/ode.hpp"

namespace qst {

using cplx = std::complex<double>;

double ReducedState::trace() const {
  return vacuum_population + excitation_block.trace().real();
}

Eigen::MatrixXcd ReducedState::assembled() const {
  const int n = n_qubits();
  Eigen::MatrixXcd m(n + 1, n + 1);
  m(0, 0) = vacuum_population;
  m.block(1, 0, n, 1) = coherence;
  m.block(0, 1, 1, n) = coherence.adjoint();
  m.block(1, 1, n, n) = excitation_block;
  return m;
}

ReducedState ReducedState::vacuum(int n_qubits) {
  ReducedState s;
  s.vacuum_population = 1.0;
  s.coherence = Eigen::VectorXcd::Zero(n_qubits);
  s.excitation_block = Eigen::MatrixXcd::Zero(n_qubits, n_qubits);
  return s;
}

ReducedState initial_state(double theta, double phi, const ChainSpec& spec) {
  ReducedState s = ReducedState::vacuum(spec.n_qubits());
  const double c = std::cos(theta / 2.0);
  const double sn = std::sin(theta / 2.0);
  s.vacuum_population = c * c;
  s.coherence(0) = c * sn * std::polar(1.0, phi);
  s.excitation_block(0, 0) = sn * sn;
  return s;
}

ReducedState time_derivative(const ReducedState& state,
                             const EffectiveGenerator& gen) {
  const Eigen::Index n = gen.generator.rows();
  if (state.coherence.size() != n || state.excitation_block.rows() != n ||
      state.excitation_block.cols() != n) {
    throw UsageError("reduced state has dimension " +
                     std::to_string(state.coherence.size()) +
                     " but the chain has " + std::to_string(n) + " qubits");
  }
  ReducedState d;
  const Eigen::MatrixXcd gr = gen.generator * state.excitation_block;
  d.excitation_block = gr + gr.adjoint();
  d.coherence = gen.generator * state.coherence;
  d.vacuum_population =
      2.0 * gen.rate *
      (gen.dissipation.cast<cplx>() * state.excitation_block).trace().real();
  return d;
}

ReducedState time_derivative(const ReducedState& state, const ChainSpec& spec) {
  return time_derivative(state, effective_generator(spec));
}

std::size_t pi_dimension(int n_qubits) {
  const auto n = static_cast<std::size_t>(n_qubits);
  return (n + 1) * (n + 1);
}

std::size_t pi_population_index(int k) { return static_cast<std::size_t>(k); }

std::size_t pi_coherence_index(int n_qubits, int k) {
  return static_cast<std::size_t>(n_qubits + 2 * k - 1);
}

std::size_t pi_pair_index(int n_qubits, int k, int l) {
  const int p = (k - 1) * (k - 2) / 2 + (l - 1);
  return static_cast<std::size_t>(3 * n_qubits + 1 + 2 * p);
}

PiCoefficients to_pi_coefficients(const ReducedState& state) {
  const int n = state.n_qubits();
  PiCoefficients a(pi_dimension(n), 0.0);
  a[0] = state.vacuum_population;
  for (int k = 1; k <= n; ++k) {
    a[pi_population_index(k)] = state.excitation_block(k - 1, k - 1).real();
    const std::size_t ci = pi_coherence_index(n, k);
    a[ci] = state.coherence(k - 1).real();
    a[ci + 1] = state.coherence(k - 1).imag();
    for (int l = 1; l < k; ++l) {
      const std::size_t pi = pi_pair_index(n, k, l);
      a[pi] = state.excitation_block(k - 1, l - 1).real();
      a[pi + 1] = state.excitation_block(k - 1, l - 1).imag();
    }
  }
  return a;
}

ReducedState from_pi_coefficients(std::span<const double> a, int n_qubits) {
  if (n_qubits < 1 || a.size() != pi_dimension(n_qubits)) {
    throw UsageError("expected " + std::to_string(pi_dimension(n_qubits)) +
                     " coefficients for " + std::to_string(n_qubits) +
                     " qubits, got " + std::to_string(a.size()));
  }
  const int n = n_qubits;
  ReducedState s = ReducedState::vacuum(n);
  s.vacuum_population = a[0];
  for (int k = 1; k <= n; ++k) {
    s.excitation_block(k - 1, k - 1) = a[pi_population_index(k)];
    const std::size_t ci = pi_coherence_index(n, k);
    s.coherence(k - 1) = cplx(a[ci], a[ci + 1]);
    for (int l = 1; l < k; ++l) {
      const std::size_t pi = pi_pair_index(n, k, l);
      const cplx v(a[pi], a[pi + 1]);
      s.excitation_block(k - 1, l - 1) = v;
      s.excitation_block(l - 1, k - 1) = std::conj(v);
    }
  }
  return s;
}

namespace {

void check_times(std::span<const double> times) {
  double prev = 0.0;
  for (double t : times) {
    if (!(t >= prev)) {
      throw UsageError("propagation times must be non-negative and sorted");
    }
    prev = t;
  }
}

void check_state(const ReducedState& s, const ChainSpec& spec) {
  const int n = spec.n_qubits();
  if (s.coherence.size() != n || s.excitation_block.rows() != n ||
      s.excitation_block.cols() != n) {
    throw UsageError("reduced state does not match the chain length");
  }
}

ReducedState apply_exponential(const ReducedState& s0,
                               const Eigen::MatrixXcd& e) {
  ReducedState s;
  s.excitation_block = e * s0.excitation_block * e.adjoint();
  s.coherence = e * s0.coherence;
  s.vacuum_population = s0.trace() - s.excitation_block.trace().real();
  return s;
}

std::vector<ReducedState> runge_kutta_grid(const ReducedState& state0,
                                           const ChainSpec& spec,
                                           std::span<const double> times,
                                           const PropagationOptions& options) {
  const EffectiveGenerator gen = effective_generator(spec);
  const int n = spec.n_qubits();
  auto rhs = [&gen, n](double, const Eigen::VectorXd& y,
                       Eigen::VectorXd& dydt) {
    const ReducedState s =
        from_pi_coefficients(std::span<const double>(y.data(), y.size()), n);
    const PiCoefficients d = to_pi_coefficients(time_derivative(s, gen));
    dydt = Eigen::Map<const Eigen::VectorXd>(d.data(), d.size());
  };
  OdeOptions ode;
  ode.rtol = options.rtol;
  ode.atol = options.atol;
  ode.initial_step = options.initial_step > 0.0
                         ? options.initial_step
                         : 0.01 / spec.energy_scale();
  DormandPrince solver(rhs, ode);

  const PiCoefficients a0 = to_pi_coefficients(state0);
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(a0.data(), a0.size());
  double t = 0.0;
  std::vector<ReducedState> out;
  out.reserve(times.size());
  for (double target : times) {
    solver.advance(t, y, target);
    out.push_back(
        from_pi_coefficients(std::span<const double>(y.data(), y.size()), n));
  }
  return out;
}

}  // namespace

std::vector<ReducedState> propagate_grid(const ReducedState& state0,
                                         const ChainSpec& spec,
                                         std::span<const double> times,
                                         Engine engine,
                                         const PropagationOptions& options) {
  check_state(state0, spec);
  check_times(times);
  if (!(options.rtol > 0.0)) throw UsageError("tolerance must be positive");
  if (engine == Engine::kRungeKutta) {
    return runge_kutta_grid(state0, spec, times, options);
  }
  const ExponentialPropagator expm(effective_generator(spec).generator);
  std::vector<ReducedState> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(apply_exponential(state0, expm.exp(t)));
  return out;
}

ReducedState propagate(const ReducedState& state0, const ChainSpec& spec,
                       double t, Engine engine,
                       const PropagationOptions& options) {
  const double times[] = {t};
  return propagate_grid(state0, spec, times, engine, options).front();
}

AmplitudePropagator::AmplitudePropagator(const ChainSpec& spec)
    : expm_(effective_generator(spec).generator),
      start_(Eigen::VectorXcd::Unit(spec.n_qubits(), 0)) {}

Eigen::VectorXcd AmplitudePropagator::amplitude(double t) const {
  if (!(t >= 0.0)) throw UsageError("time must be non-negative");
  return expm_.apply(t, start_);
}

Eigen::VectorXcd AmplitudePropagator::derivative(
    const Eigen::VectorXcd& psi) const {
  return expm_.generator() * psi;
}

Eigen::VectorXcd propagate_amplitude(const ChainSpec& spec, double t) {
  return AmplitudePropagator(spec).amplitude(t);
}

ReducedState state_from_amplitude(const Eigen::VectorXcd& psi, double theta,
                                  double phi) {
  ReducedState s;
  const double sn = std::sin(theta / 2.0);
  s.excitation_block = sn * sn * psi * psi.adjoint();
  s.coherence = 0.5 * std::sin(theta) * std::polar(1.0, phi) * psi;
  s.vacuum_population = 1.0 - s.excitation_block.trace().real();
  return s;
}

}  // namespace qst
