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
#include <vector>

#include "qst/chain_model.hpp"

/// Self-checks of the engine: brute-force oracle comparisons, the printed
/// coefficient systems, closed forms for three qubits and the invariant
/// suite. Erratum candidates are reported but never gate.
namespace qst::validation {

enum class CheckStatus { kPass, kFail, kErratumCandidate };

std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  std::string group;  // oracle, invariant, printed, analytic
  bool gating = true;
  CheckStatus status = CheckStatus::kPass;
  // Largest deviation seen; for lower-bound checks, the smallest value.
  double max_deviation = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationOptions {
  int max_n = 5;  // 3..6
  double rtol = 1e-10;
  double atol = 1e-13;
};

struct ValidationReport {
  std::vector<CheckRecord> checks;

  bool gates_passed() const;
  std::size_t count(CheckStatus s) const;
};

/// The oracle grid: xi = 1, gamma in {0, 0.5, 4, 20}, input
/// (pi/3, pi/5), 50 times on [0, 2], every boundary and topology.
std::vector<double> oracle_times();
std::vector<double> oracle_rates();
std::vector<ChainSpec> oracle_specs(int max_n);

/// One record per chain of the oracle grid (tolerance 1e-8, 1e-9 without
/// noise) plus aggregated full-trajectory invariants.
std::vector<CheckRecord> oracle_checks(const ValidationOptions& options);

/// Reduced-engine invariants over the oracle grid: trace, positivity,
/// rank-1 signature identity, dark-state kernels, decay of |c| and
/// agreement of the two engines.
std::vector<CheckRecord> invariant_checks(const ValidationOptions& options);

/// Printed three-qubit coefficient systems against the general generator,
/// at (xi, gamma) = (1.3, 0.7).
std::vector<CheckRecord> printed_system_checks();

/// Three-qubit closed forms against the reduced engine.
std::vector<CheckRecord> analytic_checks();

ValidationReport run_validation(const ValidationOptions& options);

/// Number of kernel vectors of the dissipation matrix: 1 for open chained
/// chains and closed chained rings of even length, 0 otherwise.
int expected_dark_states(const ChainSpec& spec);

}  // namespace qst::validation
