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

#include "qst/printed_systems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qst/errors.hpp"

namespace qst {
namespace {

using Coeffs = std::span<const double>;

PiCoefficients open_chained(Coeffs a, double xi, double g) {
  PiCoefficients d(16);
  d[0] = 2 * g * (a[1] + a[3] + 2 * (a[10] + a[14] + a[2]));
  d[1] = -2 * g * (a[1] + a[10]) + 2 * xi * a[11];
  d[2] = -2 * g * (a[10] + a[14] + 2 * a[2]) + 2 * xi * (a[15] - a[11]);
  d[3] = -2 * g * (a[3] + a[14]) - 2 * xi * a[15];
  d[4] = -g * (a[4] + a[6]) + xi * a[7];
  d[5] = -g * (a[5] + a[7]) - xi * a[6];
  d[6] = -g * (a[4] + 2 * a[6] + a[8]) + xi * (a[5] + a[9]);
  d[7] = -g * (a[5] + 2 * a[7] + a[9]) - xi * (a[4] + xi * a[8]);
  d[8] = -g * (a[6] + a[8]) + xi * a[7];
  d[9] = -g * (a[7] + a[9]) - xi * a[6];
  d[10] = -g * (a[1] + a[2] + 3 * a[10] + a[12]) + xi * a[13];
  d[11] = -g * (3 * a[11] + a[13]) - xi * (a[1] - a[2] + a[12]);
  d[12] = -g * (a[10] + 2 * a[12] + a[13]) + xi * (a[11] - a[15]);
  d[13] = -g * (a[11] + 2 * a[13] - a[15]) - xi * (a[10] - a[14]);
  d[14] = -g * (a[2] + a[3] + a[12] + 3 * a[14]) - xi * a[13];
  d[15] = -g * (a[13] + 3 * a[15]) - xi * (a[2] - a[3] - a[12]);
  return d;
}

// Trimmed basis: a_10 = Im R21, a_11 = Re R31, a_12 = Im R32.
PiCoefficients open_local(Coeffs a, double xi, double g) {
  PiCoefficients d(13);
  d[0] = 2 * g * (a[1] + a[2] + a[3]);
  d[1] = -2 * g * a[1] + 2 * xi * a[10];
  d[2] = -2 * g * a[2] + 2 * xi * (a[12] - a[10]);
  d[3] = -2 * g * a[3] - 2 * xi * a[12];
  d[4] = -g * a[4] + xi * a[7];
  d[5] = -g * a[5] - xi * a[6];
  d[6] = -g * a[6] + xi * (a[5] + a[9]);
  d[7] = -g * a[7] - xi * (a[4] + a[8]);
  d[8] = -g * a[8] + xi * a[7];
  d[9] = -g * a[9] - xi * a[6];
  d[10] = -2 * g * a[10] + xi * (a[2] - a[1] - a[11]);
  d[11] = -2 * g * a[11] + xi * (a[10] - a[12]);
  d[12] = -2 * g * a[12] + xi * (a[11] + a[3] - a[2]);
  return d;
}

PiCoefficients closed_chained(Coeffs a, double xi, double g) {
  PiCoefficients d(16);
  d[0] = 2 * g * (a[1] + a[2] + a[3]);
  d[1] = -2 * g * a[1] + 2 * xi * (a[11] + a[13]);
  d[2] = -2 * g * a[2] + 2 * xi * (a[15] - a[11]);
  d[3] = -2 * g * a[3] - 2 * xi * (a[13] + a[15]);
  d[4] = -g * a[4] + xi * (a[7] + a[9]);
  d[5] = -g * a[5] - xi * (a[5] + a[8]);
  d[6] = -g * a[6] + xi * (a[5] + a[9]);
  d[7] = -g * a[7] - xi * (a[4] + a[8]);
  d[8] = -g * a[8] + xi * (a[5] + a[7]);
  d[9] = -g * a[9] - xi * (a[4] + a[6]);
  d[10] = -2 * g * a[10] + xi * (a[13] + a[15]);
  d[11] = -2 * g * a[11] + xi * (a[2] + a[14] - a[1] - a[12]);
  d[12] = -2 * g * a[12] + xi * (a[11] - a[15]);
  d[13] = -2 * g * a[13] + xi * (a[3] + a[14] - a[1] - a[10]);
  d[14] = -2 * g * a[14] - xi * (a[11] + a[13]);
  d[15] = -2 * g * a[15] + xi * (a[3] + a[12] - a[2] - a[10]);
  return d;
}

PiCoefficients closed_local(Coeffs a, double xi, double g) {
  PiCoefficients d(16);
  d[0] = 4 * g * (a[1] + a[2] + a[3] + a[10] + a[12] + a[14]);
  d[1] = -2 * g * (2 * a[1] + a[10] + a[12]) + 2 * xi * (a[11] + a[13]);
  d[2] = -2 * g * (2 * a[1] + a[10] + a[14]) - 2 * xi * (a[11] - a[15]);
  d[3] = -2 * g * (2 * a[3] + a[12] + a[14]) - 2 * xi * (a[13] + a[15]);
  d[4] = -g * (2 * a[4] + a[6] + a[8]) + xi * (a[7] + a[9]);
  d[5] = -g * (2 * a[5] + a[7] + a[9]) - xi * (a[6] + a[8]);
  d[6] = -g * (a[4] + 2 * a[6] + a[8]) + xi * (a[5] + a[9]);
  d[7] = -g * (a[5] + 2 * a[7] + a[9]) - xi * (a[4] + a[8]);
  d[8] = -g * (a[4] + a[6] + 2 * a[8]) + xi * (a[5] + a[7]);
  d[9] = -g * (a[5] + 2 * a[9] + a[7]) - xi * (a[4] + a[6]);
  // b_12 in the published line.
  d[10] = -g * (a[1] + a[2] + 4 * a[10] + a[12] + a[14]) +
          xi * (a[13] + a[15]);
  d[11] = -g * (a[13] + a[15] + 4 * a[11]) +
          xi * (a[2] - a[1] - a[12] + a[14]);
  d[12] = -g * (a[1] + a[3] + a[10] + 4 * a[12] + a[14]) +
          xi * (a[11] - a[15]);
  d[13] = -g * (a[11] + 4 * a[13] + a[15]) +
          xi * (a[14] - a[1] + a[3] - a[10]);
  d[14] = -g * (a[2] + a[3] + a[10] + a[12] + 4 * a[14]) -
          xi * (a[11] + a[13]);
  d[15] = -g * (4 * a[15] - a[11] + a[13]) +
          xi * (a[3] - a[2] - a[10] + a[12]);
  return d;
}

}  // namespace

std::string_view to_string(PrintedSystem v) {
  switch (v) {
    case PrintedSystem::kOpenChained: return "open-chained";
    case PrintedSystem::kOpenLocal: return "open-local";
    case PrintedSystem::kClosedChained: return "closed-chained";
    case PrintedSystem::kClosedLocal: return "closed-local";
  }
  return "?";
}

PrintedSystem printed_system(Boundary b, Topology t) {
  if (b == Boundary::kOpen) {
    return t == Topology::kChained ? PrintedSystem::kOpenChained
                                   : PrintedSystem::kOpenLocal;
  }
  return t == Topology::kChained ? PrintedSystem::kClosedChained
                                 : PrintedSystem::kClosedLocal;
}

Boundary boundary_of(PrintedSystem v) {
  return v == PrintedSystem::kOpenChained || v == PrintedSystem::kOpenLocal
             ? Boundary::kOpen
             : Boundary::kClosed;
}

Topology topology_of(PrintedSystem v) {
  return v == PrintedSystem::kOpenChained ||
                 v == PrintedSystem::kClosedChained
             ? Topology::kChained
             : Topology::kLocal;
}

std::size_t printed_dimension(PrintedSystem v) {
  return v == PrintedSystem::kOpenLocal ? 13 : 16;
}

std::vector<std::size_t> printed_basis(PrintedSystem v) {
  if (v == PrintedSystem::kOpenLocal) {
    return {0, 1, 2, 3, 4, 5, 6, 7, 8, 9,
            pi_pair_index(3, 2, 1) + 1,   // Im R21
            pi_pair_index(3, 3, 1),       // Re R31
            pi_pair_index(3, 3, 2) + 1};  // Im R32
  }
  std::vector<std::size_t> basis(16);
  for (std::size_t i = 0; i < basis.size(); ++i) basis[i] = i;
  return basis;
}

PiCoefficients printed_rhs(std::span<const double> a, PrintedSystem v,
                            double xi, double gamma) {
  if (a.size() != printed_dimension(v)) {
    throw UsageError("printed " + std::string(to_string(v)) + " system has " +
                     std::to_string(printed_dimension(v)) +
                     " coefficients, got " + std::to_string(a.size()));
  }
  switch (v) {
    case PrintedSystem::kOpenChained: return open_chained(a, xi, gamma);
    case PrintedSystem::kOpenLocal: return open_local(a, xi, gamma);
    case PrintedSystem::kClosedChained: return closed_chained(a, xi, gamma);
    case PrintedSystem::kClosedLocal: return closed_local(a, xi, gamma);
  }
  throw UsageError("unknown printed system");
}

PiCoefficients printed_rhs(std::span<const double> a, const ChainSpec& spec) {
  if (spec.n_qubits() != 3) {
    throw UnsupportedError(
        "published coefficient systems exist only for three qubits, got N=" +
        std::to_string(spec.n_qubits()));
  }
  return printed_rhs(a, printed_system(spec.boundary(), spec.topology()),
                      spec.coupling(), spec.rate());
}

SystemComparison compare_printed(PrintedSystem printed,
                                    Topology derived_topology, double xi,
                                    double gamma, double tolerance) {
  SystemComparison cmp;
  cmp.printed = printed;
  cmp.boundary = boundary_of(printed);
  cmp.derived_topology = derived_topology;
  cmp.xi = xi;
  cmp.gamma = gamma;

  const ChainSpec spec(3, cmp.boundary, derived_topology, xi, gamma);
  const EffectiveGenerator gen = effective_generator(spec);
  const std::vector<std::size_t> basis = printed_basis(printed);
  const std::size_t dim = basis.size();
  const std::size_t full = pi_dimension(3);

  std::vector<bool> kept(full, false);
  for (std::size_t i : basis) kept[i] = true;

  for (std::size_t col = 0; col < dim; ++col) {
    PiCoefficients unit_full(full, 0.0);
    unit_full[basis[col]] = 1.0;
    const PiCoefficients derived = to_pi_coefficients(
        time_derivative(from_pi_coefficients(unit_full, 3), gen));

    std::vector<double> unit_printed(dim, 0.0);
    unit_printed[col] = 1.0;
    const PiCoefficients printed_col =
        printed_rhs(unit_printed, printed, xi, gamma);

    for (std::size_t row = 0; row < dim; ++row) {
      const double d = derived[basis[row]];
      if (std::abs(printed_col[row] - d) > tolerance) {
        cmp.mismatches.push_back({row, col, printed_col[row], d});
      }
    }
    for (std::size_t i = 0; i < full; ++i) {
      if (!kept[i]) cmp.leakage = std::max(cmp.leakage, std::abs(derived[i]));
    }
  }
  return cmp;
}

}  // namespace qst
