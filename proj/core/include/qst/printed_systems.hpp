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
#include <string_view>
#include <vector>

#include "qst/chain_model.hpp"
#include "qst/reduced_dynamics.hpp"

namespace qst {

/// The four published three-qubit coefficient systems, transcribed as
/// printed. They are regression fixtures, not a second dynamics engine:
/// several lines carry typesetting slips (see compare_printed).
enum class PrintedSystem {
  kOpenChained,
  kOpenLocal,
  kClosedChained,
  kClosedLocal,
};

std::string_view to_string(PrintedSystem v);
PrintedSystem printed_system(Boundary b, Topology t);
Boundary boundary_of(PrintedSystem v);
Topology topology_of(PrintedSystem v);

/// Number of printed coefficients: 16, except 13 for the open/local system
/// whose basis drops Re R21, Im R31 and Re R32.
std::size_t printed_dimension(PrintedSystem v);

/// Maps printed coefficient i to its position in the general PiCoefficients
/// layout of reduced_dynamics.hpp (identity except for open/local).
std::vector<std::size_t> printed_basis(PrintedSystem v);

/// Time derivative of the printed coefficients, term for term as published.
/// The unresolved symbol b_12 in the closed/local a_10 line is read as a_12.
/// Throws UsageError when a.size() != printed_dimension(v).
PiCoefficients printed_rhs(std::span<const double> a, PrintedSystem v,
                            double xi, double gamma);

/// Same, with variant and parameters taken from `spec`. Only three-qubit
/// chains have published systems; other lengths throw UnsupportedError.
PiCoefficients printed_rhs(std::span<const double> a, const ChainSpec& spec);

struct CoefficientMismatch {
  std::size_t row = 0;  // printed index of the differentiated coefficient
  std::size_t col = 0;  // printed index of the coefficient it depends on
  double printed = 0.0;
  double derived = 0.0;
};

struct SystemComparison {
  PrintedSystem printed = PrintedSystem::kOpenChained;
  // Master equation the printed system was compared against.
  Boundary boundary = Boundary::kOpen;
  Topology derived_topology = Topology::kChained;
  double xi = 0.0;
  double gamma = 0.0;
  std::vector<CoefficientMismatch> mismatches;
  // Largest derived coupling from the printed basis to coefficients it
  // omits; non-zero would mean the trimmed basis is not invariant.
  double leakage = 0.0;

  bool exact() const noexcept { return mismatches.empty() && leakage == 0.0; }
};

/// Compares the printed system `printed` with the linear map induced by
/// time_derivative for a three-qubit chain with the printed boundary and
/// `derived_topology`, entry by entry of the coefficient matrix.
SystemComparison compare_printed(PrintedSystem printed,
                                    Topology derived_topology, double xi,
                                    double gamma, double tolerance = 1e-12);

}  // namespace qst
