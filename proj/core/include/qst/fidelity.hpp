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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qst/chain_model.hpp"
#include "qst/reduced_dynamics.hpp"
#include "qst/signature.hpp"

namespace qst {

/// 2x2 density matrix of the output qubit in the computational ordering
/// (|0>, |1>): entry (1,1) is the excited population, entry (1,0) is
/// <1|rho_o|0>.
struct OutputQubitState {
  Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity() * 0.5;

  double excited_population() const { return matrix(1, 1).real(); }
  std::complex<double> coherence() const { return matrix(1, 0); }
};

/// Output qubit for the input cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>.
OutputQubitState output_qubit_state(const OutputSignature& sig, double theta,
                                    double phi);

/// Output qubit read from a reduced state; `o` is 1-based.
OutputQubitState output_qubit_state(const ReducedState& state, int o);

/// Local unitary applied to the output qubit before comparing with the
/// input. Written [[u*, -v*], [v, u]] in the (|1>, |0>) ordering in which
/// the average-fidelity formula is expressed, i.e. [[u, v], [-v*, u*]] in
/// the computational ordering returned by matrix().
struct OutputUnitary {
  std::complex<double> u{1.0, 0.0};
  std::complex<double> v{0.0, 0.0};

  /// Throws UsageError unless |u|^2 + |v|^2 = 1 within 1e-12.
  void validate() const;
  Eigen::Matrix2cd matrix() const;
  /// Pure phase rotation with |u| = 1, v = 0.
  static OutputUnitary phase(std::complex<double> u);
};

/// <psi| V rho_o V^dagger |psi> for the input state psi(theta, phi).
double single_input_fidelity(const OutputQubitState& out, double theta,
                             double phi, const OutputUnitary& unitary);

/// Bloch-sphere average of single_input_fidelity for the given u:
/// 1/2 + (2 rho |u|^2 + 2 (sigma u*^2 + sigma* u^2) - rho) / 6.
double average_fidelity(const OutputSignature& sig, std::complex<double> u);

/// Unit-modulus u with 2 arg u = arg sigma, so that sigma u*^2 is real and
/// positive. Returns 1 when sigma = 0.
std::complex<double> optimal_u(const OutputSignature& sig);

/// 1/2 + (rho + 4 |sigma|) / 6. Throws InvariantViolation for rho < -1e-12.
double optimal_average_fidelity(const OutputSignature& sig);

/// Signature of the chain at time t from the amplitude fast path:
/// rho = |psi_o|^2, sigma = psi_o / 2.
OutputSignature output_signature(const ChainSpec& spec, double t);

/// Reads the signature off a reduced state propagated from the input
/// theta = pi/2, phi = 0, where rho = 2 R_oo and sigma = c_o.
OutputSignature signature_from_reference_state(const ReducedState& state,
                                               int o);

/// Signature along a time axis for one chain, sharing one factorisation.
class SignatureTracker {
 public:
  explicit SignatureTracker(const ChainSpec& spec);

  OutputSignature at(double t) const;
  double fidelity(double t) const;
  /// Sign-carrying part of dF/dt: Re(conj(psi_o) (G psi)_o). dF/dt has the
  /// same sign wherever psi_o != 0.
  double fidelity_slope(double t) const;
  int output() const noexcept { return output_; }

 private:
  AmplitudePropagator propagator_;
  int output_;
};

struct FidelityResult {
  std::vector<double> times;
  std::vector<double> fidelity;
  double t_star = 0.0;
  double f_max = 0.5;
  std::complex<double> u_opt{1.0, 0.0};
  OutputSignature signature_at_max;
};

/// 10/xi + 5/max(gamma, xi); for xi = 0 the first term becomes 10/gamma.
double default_t_max(const ChainSpec& spec);

constexpr int kDefaultGrid = 2000;

/// Scans n_grid uniformly spaced times on [0, t_max], then refines every
/// grid local maximum within 0.1% of the best one and returns the global
/// optimum. Throws UsageError for t_max <= 0 or n_grid < 100.
FidelityResult max_fidelity(const ChainSpec& spec,
                            std::optional<double> t_max = std::nullopt,
                            int n_grid = kDefaultGrid);

struct SweepRow {
  ChainSpec spec;
  double t_star = 0.0;
  double f_max = 0.0;
  std::string error;  // empty on success

  bool ok() const noexcept { return error.empty(); }
};

/// max_fidelity for every spec, rows in input order. Rows are evaluated on
/// up to `threads` workers (0 = hardware concurrency); a failing row
/// carries its error message instead of aborting the sweep.
std::vector<SweepRow> sweep(std::span<const ChainSpec> specs,
                            std::optional<double> t_max = std::nullopt,
                            int n_grid = kDefaultGrid, unsigned threads = 0);

}  // namespace qst
