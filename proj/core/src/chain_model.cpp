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

#include "qst/chain_model.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qst/errors.hpp"

namespace qst {

std::string_view to_string(Boundary b) {
  return b == Boundary::kOpen ? "open" : "closed";
}

std::string_view to_string(Topology t) {
  return t == Topology::kChained ? "chained" : "local";
}

Boundary parse_boundary(std::string_view s) {
  if (s == "open") return Boundary::kOpen;
  if (s == "closed") return Boundary::kClosed;
  throw UsageError("unknown boundary '" + std::string(s) +
                   "' (expected open or closed)");
}

Topology parse_topology(std::string_view s) {
  if (s == "chained") return Topology::kChained;
  if (s == "local") return Topology::kLocal;
  throw UsageError("unknown topology '" + std::string(s) +
                   "' (expected chained or local)");
}

ChainSpec::ChainSpec(int n_qubits, Boundary boundary, Topology topology,
                     double coupling, double rate)
    : n_qubits_(n_qubits),
      boundary_(boundary),
      topology_(topology),
      coupling_(coupling),
      rate_(rate) {
  if (n_qubits < 2) {
    throw SpecError("chain needs at least 2 qubits, got " +
                    std::to_string(n_qubits));
  }
  if (boundary == Boundary::kClosed && n_qubits < 3) {
    throw SpecError("closed chain needs at least 3 qubits, got " +
                    std::to_string(n_qubits));
  }
  if (!std::isfinite(coupling)) throw SpecError("coupling must be finite");
  if (!std::isfinite(rate) || rate < 0.0) {
    throw SpecError("dissipation rate must be finite and non-negative");
  }
}

int ChainSpec::n_bonds() const noexcept {
  return boundary_ == Boundary::kOpen ? n_qubits_ - 1 : n_qubits_;
}

double ChainSpec::energy_scale() const noexcept {
  return std::max({std::abs(coupling_), rate_, 1e-12});
}

Eigen::MatrixXd build_hop_matrix(const ChainSpec& spec) {
  const int n = spec.n_qubits();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (int bond = 0; bond < spec.n_bonds(); ++bond) {
    const int a = bond;
    const int b = (bond + 1) % n;
    h(a, b) = spec.coupling();
    h(b, a) = spec.coupling();
  }
  return h;
}

Eigen::MatrixXd build_dissipation_matrix(const ChainSpec& spec) {
  const int n = spec.n_qubits();
  if (spec.topology() == Topology::kLocal) {
    return Eigen::MatrixXd::Identity(n, n);
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int bond = 0; bond < spec.n_bonds(); ++bond) {
    const int a = bond;
    const int b = (bond + 1) % n;
    m(a, a) += 1.0;
    m(b, b) += 1.0;
    m(a, b) += 1.0;
    m(b, a) += 1.0;
  }
  return m;
}

int output_index(const ChainSpec& spec) {
  const int n = spec.n_qubits();
  if (spec.boundary() == Boundary::kOpen) return n;
  return (n + 1) / 2 + 1;
}

EffectiveGenerator effective_generator(const ChainSpec& spec) {
  EffectiveGenerator g;
  g.hop = build_hop_matrix(spec);
  g.dissipation = build_dissipation_matrix(spec);
  g.rate = spec.rate();
  const std::complex<double> minus_i(0.0, -1.0);
  g.generator = minus_i * g.hop.cast<std::complex<double>>() -
                spec.rate() * g.dissipation.cast<std::complex<double>>();
  return g;
}

}  // namespace qst
