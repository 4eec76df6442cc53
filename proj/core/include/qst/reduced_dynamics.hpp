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

#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qst/chain_model.hpp"
#include "qst/matrix_exponential.hpp"

namespace qst {

/// Density operator restricted to span{|0>, |1>, ..., |N>}, where |0> is the
/// vacuum and |k> carries the single excitation on qubit k.
///
/// `coherence(k-1)` is <k|rho|0> and `excitation_block(k-1, l-1)` is
/// <k|rho|l>. Everything outside this block vanishes for inputs with at most
/// one excitation, and the dynamics never leaves it.
struct ReducedState {
  double vacuum_population = 1.0;
  Eigen::VectorXcd coherence;
  Eigen::MatrixXcd excitation_block;

  int n_qubits() const noexcept {
    return static_cast<int>(coherence.size());
  }
  double trace() const;
  /// (N+1)x(N+1) matrix [[p00, c^H], [c, R]], row/column 0 is the vacuum.
  Eigen::MatrixXcd assembled() const;

  static ReducedState vacuum(int n_qubits);
};

/// Qubit 1 prepared in cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>, all
/// other qubits in |0>.
ReducedState initial_state(double theta, double phi, const ChainSpec& spec);

/// Right-hand side of the master equation on the reduced block:
///   dR/dt = G R + R G^H,  dc/dt = G c,  dp00/dt = 2 gamma tr(M R).
ReducedState time_derivative(const ReducedState& state, const ChainSpec& spec);
ReducedState time_derivative(const ReducedState& state,
                             const EffectiveGenerator& generator);

// --- Real coefficients on the operator basis Pi_i -------------------------
//
// a_0 = p00, a_k = R_kk, (a_{N+2k-1}, a_{N+2k}) = (Re, Im) c_k, and the pair
// (k > l) occupies (Re, Im) R_kl at 3N+1 + 2p with p enumerating
// (2,1), (3,1), (3,2), (4,1), ... For three qubits this is exactly
// Pi_{2k+2}, Pi_{2k+3} and Pi_{2k+2l+4}, Pi_{2k+2l+5}.

using PiCoefficients = std::vector<double>;

std::size_t pi_dimension(int n_qubits);
std::size_t pi_population_index(int k);
std::size_t pi_coherence_index(int n_qubits, int k);  // real part; imag is +1
std::size_t pi_pair_index(int n_qubits, int k, int l);  // k > l; imag is +1

PiCoefficients to_pi_coefficients(const ReducedState& state);
/// Throws UsageError unless a.size() == (N+1)^2.
ReducedState from_pi_coefficients(std::span<const double> a, int n_qubits);

// --- Propagation -----------------------------------------------------------

enum class Engine { kRungeKutta, kExponential };

struct PropagationOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  // 0 selects (1/100) / max(coupling, rate).
  double initial_step = 0.0;
};

ReducedState propagate(const ReducedState& state0, const ChainSpec& spec,
                       double t, Engine engine,
                       const PropagationOptions& options = {});

/// States at each of `times` (non-decreasing, >= 0). The Runge-Kutta engine
/// integrates once through the whole grid.
std::vector<ReducedState> propagate_grid(const ReducedState& state0,
                                         const ChainSpec& spec,
                                         std::span<const double> times,
                                         Engine engine,
                                         const PropagationOptions& options = {});

/// psi(t) = exp(G t) e_1, the conditional single-excitation amplitude.
Eigen::VectorXcd propagate_amplitude(const ChainSpec& spec, double t);

/// Reusable form of propagate_amplitude for many times on one chain.
class AmplitudePropagator {
 public:
  explicit AmplitudePropagator(const ChainSpec& spec);

  Eigen::VectorXcd amplitude(double t) const;
  /// d psi / dt = G psi(t).
  Eigen::VectorXcd derivative(const Eigen::VectorXcd& psi) const;
  const ExponentialPropagator& exponential() const noexcept { return expm_; }

 private:
  ExponentialPropagator expm_;
  Eigen::VectorXcd start_;
};

/// Rebuilds the full reduced state from the amplitude:
/// R = sin^2(theta/2) psi psi^H, c = (1/2) sin(theta) e^{i phi} psi.
ReducedState state_from_amplitude(const Eigen::VectorXcd& psi, double theta,
                                  double phi);

}  // namespace qst
