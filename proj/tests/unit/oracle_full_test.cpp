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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qst/errors.hpp"
#include "qst/oracle_full.hpp"

namespace qst::oracle {
namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

TEST(Lowering, Examples) {
  const Eigen::MatrixXcd s1 = build_lowering(2, 1);
  // |10> -> |00>: qubit 1 is the high bit.
  EXPECT_EQ(s1(0, 2), cplx(1.0));
  EXPECT_EQ(s1.cwiseAbs().sum(), 2.0);
  const Eigen::MatrixXcd s2 = build_lowering(2, 2);
  EXPECT_EQ(s2(0, 1), cplx(1.0));
  EXPECT_EQ(s2(2, 3), cplx(1.0));
  for (int k = 1; k <= 4; ++k) {
    const Eigen::MatrixXcd s = build_lowering(4, k);
    EXPECT_EQ((s * s).cwiseAbs().maxCoeff(), 0.0);
    const Eigen::MatrixXcd anti = s * s.adjoint() + s.adjoint() * s;
    EXPECT_EQ(anti, Eigen::MatrixXcd::Identity(16, 16));
  }
  EXPECT_THROW(build_lowering(7, 1), ResourceError);
  EXPECT_THROW(build_lowering(3, 0), UsageError);
  EXPECT_THROW(build_lowering(3, 4), UsageError);
}

TEST(Operators, Counts) {
  EXPECT_EQ(jump_operators(ChainSpec(4, Boundary::kOpen, Topology::kChained, 1, 1))
                .size(),
            3u);
  EXPECT_EQ(
      jump_operators(ChainSpec(4, Boundary::kClosed, Topology::kChained, 1, 1))
          .size(),
      4u);
  EXPECT_EQ(jump_operators(ChainSpec(4, Boundary::kOpen, Topology::kLocal, 1, 1))
                .size(),
            4u);
  const Eigen::MatrixXcd h =
      hamiltonian(ChainSpec(3, Boundary::kClosed, Topology::kLocal, 0.5, 0));
  EXPECT_EQ((h - h.adjoint()).cwiseAbs().maxCoeff(), 0.0);
  // |100> hops to |010> and (around the ring) to |001>.
  EXPECT_EQ(h(2, 4), cplx(0.5));
  EXPECT_EQ(h(1, 4), cplx(0.5));
}

TEST(Lindbladian, Properties) {
  for (Topology t : {Topology::kChained, Topology::kLocal}) {
    const ChainSpec spec(3, Boundary::kClosed, t, 0.9, 1.7);
    const FullLindbladian l(spec);
    Eigen::MatrixXcd ground = Eigen::MatrixXcd::Zero(8, 8);
    ground(0, 0) = 1.0;
    EXPECT_EQ(l.rhs(ground).cwiseAbs().maxCoeff(), 0.0);

    const Eigen::MatrixXcd rho = initial_full_state(1.2, 0.4, spec);
    const Eigen::MatrixXcd d = l.rhs(rho);
    EXPECT_NEAR(std::abs(d.trace()), 0.0, 1e-14);
    EXPECT_LE((d - d.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LE((d - lindblad_rhs(rho, spec)).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Lindbladian, SingletIsDark) {
  const ChainSpec spec(2, Boundary::kOpen, Topology::kChained, 0.0, 1.0);
  Eigen::VectorXcd singlet = Eigen::VectorXcd::Zero(4);
  singlet(1) = 1.0 / std::numbers::sqrt2;
  singlet(2) = -1.0 / std::numbers::sqrt2;
  const Eigen::MatrixXcd rho = singlet * singlet.adjoint();
  EXPECT_LE(lindblad_rhs(rho, spec).cwiseAbs().maxCoeff(), 1e-16);
}

TEST(Propagation, UnitaryKeepsPurity) {
  const ChainSpec spec(4, Boundary::kOpen, Topology::kLocal, 1.0, 0.0);
  const Eigen::MatrixXcd rho =
      propagate_full(initial_full_state(pi / 3, 0.2, spec), spec, 3.0,
                     default_oracle_options(spec));
  EXPECT_NEAR((rho * rho).trace().real(), 1.0, 1e-9);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
  EXPECT_EQ(outside_single_excitation(rho), 0.0);
}

TEST(PartialTrace, Examples) {
  const ChainSpec spec(3, Boundary::kOpen, Topology::kLocal, 1.0, 0.0);
  // Product state: qubit 1 keeps its own density matrix.
  const Eigen::MatrixXcd product = initial_full_state(pi / 2, 0.0, spec);
  const OutputQubitState q1 = partial_trace_to_qubit(product, 1);
  EXPECT_NEAR(q1.matrix(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(q1.coherence().real(), 0.5, 1e-15);
  EXPECT_NEAR(partial_trace_to_qubit(product, 3).excited_population(), 0.0,
              1e-15);

  const Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Identity(8, 8) / 8.0;
  const OutputQubitState m = partial_trace_to_qubit(mixed, 2);
  EXPECT_LE((m.matrix - 0.5 * Eigen::Matrix2cd::Identity()).norm(), 1e-15);

  // (|01> + |10>)/sqrt2 on qubits 2, 3: each half is maximally mixed.
  Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(8);
  bell(1) = bell(2) = 1.0 / std::numbers::sqrt2;
  const OutputQubitState b = partial_trace_to_qubit(bell * bell.adjoint(), 3);
  EXPECT_NEAR(b.excited_population(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(b.coherence()), 0.0, 1e-15);
  EXPECT_GT(outside_single_excitation(Eigen::MatrixXcd::Identity(8, 8)), 0.0);
}

TEST(CompareReduced, GroundInputIsExact) {
  const ChainSpec spec(4, Boundary::kClosed, Topology::kChained, 1.0, 0.5);
  const std::vector<double> times{0.0, 0.5, 1.0};
  const DeviationReport r = compare_reduced(spec, 0.0, 0.0, times);
  EXPECT_EQ(r.max_deviation, 0.0);
  EXPECT_EQ(r.n_times, 3u);
}

TEST(CompareReduced, AgreesWithReducedEngine) {
  const std::vector<double> times{0.0, 0.3, 0.9, 2.0};
  for (Topology t : {Topology::kChained, Topology::kLocal}) {
    const ChainSpec spec(4, Boundary::kOpen, t, 1.0, 0.5);
    const DeviationReport r = compare_reduced(spec, pi / 3, pi / 5, times);
    EXPECT_LE(r.max_deviation, 1e-8);
    EXPECT_LE(r.max_trace_error, 1e-10);
    EXPECT_GE(r.min_eigenvalue, -1e-10);
    EXPECT_LE(r.max_outside_sector, 1e-12);
  }
}

}  // namespace
}  // namespace qst::oracle
