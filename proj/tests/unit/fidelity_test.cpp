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
#include <random>

#include <boost/math/quadrature/gauss.hpp>

#include "qst/errors.hpp"
#include "qst/fidelity.hpp"

namespace qst {
namespace {

using cplx = std::complex<double>;
using std::numbers::pi;

// <psi| V rho_o V^dagger |psi> assembled by hand from the signature.
double fidelity_by_hand(const OutputSignature& s, double theta, double phi,
                        cplx u, cplx v) {
  const double s2 = std::pow(std::sin(theta / 2), 2);
  Eigen::Matrix2cd rho;
  const cplx c = s.sigma * std::sin(theta) * std::polar(1.0, phi);
  rho << 1.0 - s.rho * s2, std::conj(c), c, s.rho * s2;
  Eigen::Matrix2cd w;
  w << u, v, -std::conj(v), std::conj(u);
  const Eigen::Vector2cd psi(std::cos(theta / 2),
                             std::sin(theta / 2) * std::polar(1.0, phi));
  return (psi.adjoint() * w * rho * w.adjoint() * psi)(0, 0).real();
}

// Bloch-sphere average by Gauss-Legendre in cos(theta) and phi.
double sphere_average(const OutputSignature& s, cplx u) {
  using boost::math::quadrature::gauss;
  return gauss<double, 20>::integrate(
             [&](double z) {
               const double theta = std::acos(z);
               return gauss<double, 20>::integrate(
                   [&](double phi) {
                     return fidelity_by_hand(s, theta, phi, u, 0.0);
                   },
                   0.0, 2.0 * pi);
             },
             -1.0, 1.0) /
         (4.0 * pi);
}

OutputSignature random_signature(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(0.0, 1.0), arg(-pi, pi);
  const double a = mod(rng);
  return {a * a, std::polar(a / 2, arg(rng))};
}

TEST(AverageFidelity, MatchesQuadrature) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> arg(-pi, pi);
  for (int i = 0; i < 20; ++i) {
    const OutputSignature s = random_signature(rng);
    const cplx u = std::polar(1.0, arg(rng));
    EXPECT_NEAR(average_fidelity(s, u), sphere_average(s, u), 1e-6);
  }
}

TEST(AverageFidelity, OptimumDominates) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> arg(-pi, pi);
  for (int i = 0; i < 1000; ++i) {
    const OutputSignature s = random_signature(rng);
    const double best = optimal_average_fidelity(s);
    EXPECT_NEAR(average_fidelity(s, optimal_u(s)), best, 1e-14);
    for (int j = 0; j < 100; ++j) {
      EXPECT_LE(average_fidelity(s, std::polar(1.0, arg(rng))), best + 1e-14);
    }
  }
}

TEST(AverageFidelity, Examples) {
  EXPECT_NEAR(average_fidelity({1.0, -0.5}, cplx(0, 1)), 1.0, 1e-15);
  EXPECT_NEAR(optimal_average_fidelity({1.0, -0.5}), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(optimal_average_fidelity({0.0, 0.0}), 0.5);
  EXPECT_NEAR(optimal_average_fidelity({0.36, cplx(0, 0.3)}), 0.76, 1e-15);
  EXPECT_THROW(optimal_average_fidelity({-1e-6, 0.0}), InvariantViolation);
}

TEST(OptimalU, Branches) {
  EXPECT_EQ(optimal_u({0.0, 0.0}), cplx(1.0, 0.0));
  EXPECT_LE(std::abs(optimal_u({0.5, 0.25}) - 1.0), 1e-15);
  EXPECT_NEAR(std::abs(optimal_u({1.0, -0.5}).real()), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(optimal_u({1.0, -0.5}).imag()), 1.0, 1e-15);
  EXPECT_LE(std::abs(optimal_u({0.1, cplx(0, 0.2)}) - std::polar(1.0, pi / 4)),
            1e-15);
}

TEST(SingleInput, Examples) {
  const OutputSignature perfect{1.0, 0.5};
  OutputUnitary id;
  for (double theta : {0.0, 0.7, pi}) {
    EXPECT_NEAR(
        single_input_fidelity(output_qubit_state(perfect, theta, 0.3), theta,
                              0.3, id),
        1.0, 1e-15);
  }
  // Nothing arrives: the output stays in |0>.
  EXPECT_NEAR(single_input_fidelity(output_qubit_state({0.0, 0.0}, pi, 0.0), pi,
                                    0.0, id),
              0.0, 1e-15);

  std::mt19937_64 rng(4);
  const OutputSignature s = random_signature(rng);
  OutputUnitary w{cplx(0.6, 0.0), cplx(0.0, 0.8)};
  EXPECT_NEAR(single_input_fidelity(output_qubit_state(s, 1.1, 2.0), 1.1, 2.0, w),
              fidelity_by_hand(s, 1.1, 2.0, w.u, w.v), 1e-15);

  OutputUnitary bad{cplx(1.0, 0.0), cplx(0.1, 0.0)};
  EXPECT_THROW(bad.validate(), UsageError);
  EXPECT_THROW(single_input_fidelity(output_qubit_state(s, 1.0, 0.0), 1.0, 0.0,
                                     bad),
               UsageError);
}

TEST(Extraction, LinearInInput) {
  const ChainSpec spec(5, Boundary::kClosed, Topology::kChained, 1.0, 0.4);
  const int o = output_index(spec);
  const double t = 2.3;
  const OutputSignature sig = signature_from_reference_state(
      propagate(initial_state(pi / 2, 0.0, spec), spec, t, Engine::kExponential),
      o);
  const OutputSignature fast = output_signature(spec, t);
  EXPECT_NEAR(sig.rho, fast.rho, 1e-12);
  EXPECT_LE(std::abs(sig.sigma - fast.sigma), 1e-12);
  for (auto [theta, phi] : {std::pair{0.3, 0.0}, {1.9, 2.5}, {pi, -1.0}}) {
    const OutputQubitState direct = output_qubit_state(
        propagate(initial_state(theta, phi, spec), spec, t, Engine::kExponential),
        o);
    const OutputQubitState predicted = output_qubit_state(sig, theta, phi);
    EXPECT_LE((direct.matrix - predicted.matrix).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MaxFidelity, PerfectTransferWithoutNoise) {
  const ChainSpec spec(3, Boundary::kOpen, Topology::kLocal, 1.0, 0.0);
  const FidelityResult r = max_fidelity(spec, 3.0);
  EXPECT_NEAR(r.f_max, 1.0, 1e-8);
  EXPECT_NEAR(r.t_star, pi / std::numbers::sqrt2, 1e-4);
  EXPECT_DOUBLE_EQ(r.fidelity.front(), 0.5);
  EXPECT_EQ(r.times.size(), static_cast<std::size_t>(kDefaultGrid));
  EXPECT_DOUBLE_EQ(r.times.back(), 3.0);
}

TEST(MaxFidelity, RefinesAboveGrid) {
  const ChainSpec spec(6, Boundary::kOpen, Topology::kChained, 1.0, 4.0);
  const FidelityResult r = max_fidelity(spec);
  for (double f : r.fidelity) EXPECT_LE(f, r.f_max + 1e-15);
  EXPECT_NEAR(optimal_average_fidelity(output_signature(spec, r.t_star)),
              r.f_max, 1e-15);
  EXPECT_NEAR(std::abs(optimal_u(r.signature_at_max) - r.u_opt), 0.0, 1e-15);
}

TEST(MaxFidelity, RejectsBadGrids) {
  const ChainSpec spec(3, Boundary::kOpen, Topology::kLocal, 1.0, 1.0);
  EXPECT_THROW(max_fidelity(spec, 0.0), UsageError);
  EXPECT_THROW(max_fidelity(spec, -1.0), UsageError);
  EXPECT_THROW(max_fidelity(spec, 5.0, 99), UsageError);
  EXPECT_DOUBLE_EQ(default_t_max(spec), 15.0);
  EXPECT_DOUBLE_EQ(
      default_t_max(ChainSpec(3, Boundary::kOpen, Topology::kLocal, 0.0, 2.0)),
      7.5);
}

TEST(Sweep, KeepsOrderAndReportsFailures) {
  std::vector<ChainSpec> specs;
  for (int n = 3; n <= 8; ++n) {
    specs.emplace_back(n, Boundary::kClosed, Topology::kLocal, 1.0, 4.0);
  }
  const auto rows = sweep(specs, std::nullopt, kDefaultGrid, 3);
  ASSERT_EQ(rows.size(), specs.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].spec, specs[i]);
    ASSERT_TRUE(rows[i].ok()) << rows[i].error;
    EXPECT_EQ(rows[i].f_max, max_fidelity(specs[i]).f_max);
  }
  const auto failed = sweep(specs, -1.0);
  for (const SweepRow& r : failed) EXPECT_FALSE(r.ok());
}

}  // namespace
}  // namespace qst
