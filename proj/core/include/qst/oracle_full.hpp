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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qst/chain_model.hpp"
#include "qst/fidelity.hpp"
#include "qst/ode.hpp"

/// Brute-force reference: the master equation on the full 2^N-dimensional
/// Hilbert space with dense matrices, used only to validate the reduced
/// engine.
///
/// Basis states are bit strings with qubit 1 as the most significant bit,
/// so qubit k is bit (N - k) of the index and |1> is the excited state.
namespace qst::oracle {

constexpr int kMaxQubits = 6;

/// sigma_k = |0><1| acting on qubit k of an N-qubit register.
/// Throws ResourceError for N > kMaxQubits, UsageError for bad k.
Eigen::MatrixXcd build_lowering(int n, int k);

Eigen::MatrixXcd hamiltonian(const ChainSpec& spec);

/// sigma_n + sigma_{n+1} for every bond (chained) or sigma_n per qubit
/// (local).
std::vector<Eigen::MatrixXcd> jump_operators(const ChainSpec& spec);

/// Precomputed right-hand side
///   -i[H, rho] + gamma * sum_L (2 L rho L^dagger - {L^dagger L, rho}).
class FullLindbladian {
 public:
  explicit FullLindbladian(const ChainSpec& spec);

  Eigen::MatrixXcd rhs(const Eigen::MatrixXcd& rho) const;
  Eigen::Index dimension() const noexcept { return h_eff_.rows(); }

 private:
  double rate_;
  Eigen::MatrixXcd h_eff_;  // H - i gamma sum L^dagger L
  std::vector<Eigen::MatrixXcd> jumps_;
};

Eigen::MatrixXcd lindblad_rhs(const Eigen::MatrixXcd& rho,
                              const ChainSpec& spec);

/// Qubit 1 in cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>, the rest in |0>.
Eigen::MatrixXcd initial_full_state(double theta, double phi,
                                    const ChainSpec& spec);

/// Tolerances used by the validation runs.
OdeOptions default_oracle_options(const ChainSpec& spec);

/// Adaptive Runge-Kutta integration to each of `times` (sorted, >= 0), with
/// rho re-symmetrised to (rho + rho^dagger)/2 after every accepted step.
std::vector<Eigen::MatrixXcd> propagate_full_grid(
    const Eigen::MatrixXcd& rho0, const ChainSpec& spec,
    std::span<const double> times, const OdeOptions& options);

Eigen::MatrixXcd propagate_full(const Eigen::MatrixXcd& rho0,
                                const ChainSpec& spec, double t,
                                const OdeOptions& options);

/// Trace over every qubit except `o` (1-based).
OutputQubitState partial_trace_to_qubit(const Eigen::MatrixXcd& rho, int o);

/// Largest |rho_ij| with i or j carrying two or more excitations.
double outside_single_excitation(const Eigen::MatrixXcd& rho);

struct DeviationReport {
  double max_deviation = 0.0;       // max elementwise |rho_o(full) - rho_o(reduced)|
  double max_deviation_time = 0.0;
  double max_trace_error = 0.0;     // |tr rho - 1|
  double max_hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;
  double max_outside_sector = 0.0;
  std::size_t n_times = 0;
};

/// Propagates the input (theta, phi) with both the full oracle and the
/// reduced exponential engine and compares the output qubit at `times`.
DeviationReport compare_reduced(const ChainSpec& spec, double theta,
                                double phi, std::span<const double> times,
                                const OdeOptions& options);
DeviationReport compare_reduced(const ChainSpec& spec, double theta,
                                double phi, std::span<const double> times);

}  // namespace qst::oracle
