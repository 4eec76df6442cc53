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

#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace qst {

enum class Boundary { kOpen, kClosed };
enum class Topology { kChained, kLocal };

std::string_view to_string(Boundary b);
std::string_view to_string(Topology t);
// Accepts "open"/"closed" and "chained"/"local"; throws UsageError otherwise.
Boundary parse_boundary(std::string_view s);
Topology parse_topology(std::string_view s);

/// Identity of one experiment: an XY chain of `n_qubits` qubits with uniform
/// nearest-neighbour coupling, dissipating at `rate` either into baths shared
/// by neighbouring pairs (chained) or into one bath per qubit (local).
///
/// Qubits are numbered 1..N everywhere in the public interface. A closed
/// chain joins qubit N back to qubit 1 and needs at least three qubits.
class ChainSpec {
 public:
  /// Throws SpecError when the invariants do not hold.
  ChainSpec(int n_qubits, Boundary boundary, Topology topology,
            double coupling, double rate);

  int n_qubits() const noexcept { return n_qubits_; }
  Boundary boundary() const noexcept { return boundary_; }
  Topology topology() const noexcept { return topology_; }
  double coupling() const noexcept { return coupling_; }
  double rate() const noexcept { return rate_; }

  /// N-1 bonds for an open chain, N for a ring.
  int n_bonds() const noexcept;

  /// max(coupling, rate), floored so it can be used as an inverse time scale.
  double energy_scale() const noexcept;

  friend bool operator==(const ChainSpec&, const ChainSpec&) = default;

 private:
  int n_qubits_;
  Boundary boundary_;
  Topology topology_;
  double coupling_;
  double rate_;
};

/// Single-excitation restriction of the XY Hamiltonian: h(k, k+1) = coupling.
Eigen::MatrixXd build_hop_matrix(const ChainSpec& spec);

/// Sum over jump operators of L^dagger L restricted to one excitation:
/// sum of v v^T with v = e_n + e_{n+1} for chained noise, identity for local.
Eigen::MatrixXd build_dissipation_matrix(const ChainSpec& spec);

/// 1-based index of the qubit farthest from the input qubit 1.
int output_index(const ChainSpec& spec);

/// G = -i h - rate * M, the generator of the conditional single-excitation
/// amplitude. The blocks it is built from are kept alongside.
struct EffectiveGenerator {
  Eigen::MatrixXd hop;
  Eigen::MatrixXd dissipation;
  Eigen::MatrixXcd generator;
  double rate = 0.0;
};

EffectiveGenerator effective_generator(const ChainSpec& spec);

}  // namespace qst
