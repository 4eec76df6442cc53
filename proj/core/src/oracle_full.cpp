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

#include "qst/oracle_full.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>

#include "qst/errors.hpp"
#include "qst/reduced_dynamics.hpp"

namespace qst::oracle {
namespace {

using cplx = std::complex<double>;

void require_size(int n) {
  if (n < 1) throw UsageError("register needs at least one qubit");
  if (n > kMaxQubits) {
    throw ResourceError("full oracle is capped at " +
                        std::to_string(kMaxQubits) + " qubits, got " +
                        std::to_string(n));
  }
}

int qubit_count(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim) {
    throw UsageError("density matrix dimension is not a power of two");
  }
  return n;
}

}  // namespace

Eigen::MatrixXcd build_lowering(int n, int k) {
  require_size(n);
  if (k < 1 || k > n) throw UsageError("site index out of range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  const Eigen::Index bit = Eigen::Index{1} << (n - k);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (i & bit) s(i & ~bit, i) = 1.0;
  }
  return s;
}

Eigen::MatrixXcd hamiltonian(const ChainSpec& spec) {
  const int n = spec.n_qubits();
  require_size(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (int bond = 0; bond < spec.n_bonds(); ++bond) {
    const int a = bond + 1;
    const int b = a == n ? 1 : a + 1;
    const Eigen::MatrixXcd sa = build_lowering(n, a);
    const Eigen::MatrixXcd sb = build_lowering(n, b);
    h += spec.coupling() * (sa * sb.adjoint() + sa.adjoint() * sb);
  }
  return h;
}

std::vector<Eigen::MatrixXcd> jump_operators(const ChainSpec& spec) {
  const int n = spec.n_qubits();
  require_size(n);
  std::vector<Eigen::MatrixXcd> jumps;
  if (spec.topology() == Topology::kLocal) {
    for (int k = 1; k <= n; ++k) jumps.push_back(build_lowering(n, k));
    return jumps;
  }
  for (int bond = 0; bond < spec.n_bonds(); ++bond) {
    const int a = bond + 1;
    const int b = a == n ? 1 : a + 1;
    jumps.push_back(build_lowering(n, a) + build_lowering(n, b));
  }
  return jumps;
}

FullLindbladian::FullLindbladian(const ChainSpec& spec)
    : rate_(spec.rate()), jumps_(jump_operators(spec)) {
  const Eigen::MatrixXcd h = hamiltonian(spec);
  Eigen::MatrixXcd decay = Eigen::MatrixXcd::Zero(h.rows(), h.cols());
  for (const auto& l : jumps_) decay += l.adjoint() * l;
  h_eff_ = h - cplx(0.0, rate_) * decay;
}

Eigen::MatrixXcd FullLindbladian::rhs(const Eigen::MatrixXcd& rho) const {
  if (rho.rows() != dimension() || rho.cols() != dimension()) {
    throw UsageError("density matrix does not match the chain dimension");
  }
  const cplx minus_i(0.0, -1.0);
  Eigen::MatrixXcd out = minus_i * (h_eff_ * rho);
  out += (minus_i * (h_eff_ * rho)).adjoint().eval();
  // The line above uses rho = rho^dagger: (-i H_eff rho)^dagger = i rho H_eff^dagger.
  for (const auto& l : jumps_) {
    out.noalias() += (2.0 * rate_) * (l * rho * l.adjoint());
  }
  return out;
}

Eigen::MatrixXcd lindblad_rhs(const Eigen::MatrixXcd& rho,
                              const ChainSpec& spec) {
  // Written out term by term so it does not lean on rho being Hermitian.
  const Eigen::MatrixXcd h = hamiltonian(spec);
  const cplx minus_i(0.0, -1.0);
  Eigen::MatrixXcd out = minus_i * (h * rho - rho * h);
  for (const auto& l : jump_operators(spec)) {
    const Eigen::MatrixXcd ldl = l.adjoint() * l;
    out += spec.rate() *
           (2.0 * l * rho * l.adjoint() - ldl * rho - rho * ldl);
  }
  return out;
}

Eigen::MatrixXcd initial_full_state(double theta, double phi,
                                    const ChainSpec& spec) {
  const int n = spec.n_qubits();
  require_size(n);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
  psi(0) = std::cos(theta / 2.0);
  psi(Eigen::Index{1} << (n - 1)) =
      std::sin(theta / 2.0) * std::polar(1.0, phi);
  return psi * psi.adjoint();
}

OdeOptions default_oracle_options(const ChainSpec& spec) {
  OdeOptions o;
  o.rtol = 1e-10;
  o.atol = 1e-13;
  o.initial_step = 0.01 / spec.energy_scale();
  return o;
}

std::vector<Eigen::MatrixXcd> propagate_full_grid(
    const Eigen::MatrixXcd& rho0, const ChainSpec& spec,
    std::span<const double> times, const OdeOptions& options) {
  const FullLindbladian lindbladian(spec);
  const Eigen::Index dim = lindbladian.dimension();
  if (rho0.rows() != dim || rho0.cols() != dim) {
    throw UsageError("initial density matrix does not match the chain");
  }

  auto as_matrix = [dim](const Eigen::VectorXd& y) {
    return Eigen::Map<const Eigen::MatrixXcd>(
        reinterpret_cast<const cplx*>(y.data()), dim, dim);
  };
  auto rhs = [&](double, const Eigen::VectorXd& y, Eigen::VectorXd& dydt) {
    const Eigen::MatrixXcd d = lindbladian.rhs(as_matrix(y));
    dydt = Eigen::Map<const Eigen::VectorXd>(
        reinterpret_cast<const double*>(d.data()), 2 * d.size());
  };
  auto hermitize = [dim](Eigen::VectorXd& y) {
    Eigen::Map<Eigen::MatrixXcd> m(reinterpret_cast<cplx*>(y.data()), dim,
                                   dim);
    const Eigen::MatrixXcd sym = 0.5 * (m + m.adjoint());
    m = sym;
  };

  DormandPrince solver(rhs, options, hermitize);
  Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(
      reinterpret_cast<const double*>(rho0.data()), 2 * rho0.size());
  double t = 0.0;
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(times.size());
  for (double target : times) {
    if (target < t) throw UsageError("times must be sorted and non-negative");
    solver.advance(t, y, target);
    out.emplace_back(as_matrix(y));
  }
  return out;
}

Eigen::MatrixXcd propagate_full(const Eigen::MatrixXcd& rho0,
                                const ChainSpec& spec, double t,
                                const OdeOptions& options) {
  const double times[] = {t};
  return propagate_full_grid(rho0, spec, times, options).front();
}

OutputQubitState partial_trace_to_qubit(const Eigen::MatrixXcd& rho, int o) {
  if (rho.rows() != rho.cols()) throw UsageError("density matrix not square");
  const int n = qubit_count(rho.rows());
  if (o < 1 || o > n) throw UsageError("output index out of range");
  const Eigen::Index bit = Eigen::Index{1} << (n - o);
  OutputQubitState out;
  out.matrix.setZero();
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (i & bit) continue;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        out.matrix(a, b) += rho(a ? i | bit : i, b ? i | bit : i);
      }
    }
  }
  return out;
}

double outside_single_excitation(const Eigen::MatrixXcd& rho) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    for (Eigen::Index j = 0; j < rho.cols(); ++j) {
      if (std::popcount(static_cast<unsigned long>(i)) > 1 ||
          std::popcount(static_cast<unsigned long>(j)) > 1) {
        worst = std::max(worst, std::abs(rho(i, j)));
      }
    }
  }
  return worst;
}

DeviationReport compare_reduced(const ChainSpec& spec, double theta,
                                double phi, std::span<const double> times,
                                const OdeOptions& options) {
  const int o = output_index(spec);
  const auto full = propagate_full_grid(initial_full_state(theta, phi, spec),
                                        spec, times, options);
  const auto reduced =
      propagate_grid(initial_state(theta, phi, spec), spec, times,
                     Engine::kExponential);

  DeviationReport report;
  report.n_times = times.size();
  report.min_eigenvalue = 1.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Eigen::MatrixXcd& rho = full[i];
    const Eigen::Matrix2cd diff = partial_trace_to_qubit(rho, o).matrix -
                                  output_qubit_state(reduced[i], o).matrix;
    const double dev = diff.cwiseAbs().maxCoeff();
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.max_deviation_time = times[i];
    }
    report.max_trace_error =
        std::max(report.max_trace_error, std::abs(rho.trace() - 1.0));
    report.max_hermiticity_error = std::max(
        report.max_hermiticity_error, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
        rho, Eigen::EigenvaluesOnly);
    report.min_eigenvalue =
        std::min(report.min_eigenvalue, eig.eigenvalues().minCoeff());
    report.max_outside_sector =
        std::max(report.max_outside_sector, outside_single_excitation(rho));
  }
  return report;
}

DeviationReport compare_reduced(const ChainSpec& spec, double theta,
                                double phi, std::span<const double> times) {
  return compare_reduced(spec, theta, phi, times,
                         default_oracle_options(spec));
}

}  // namespace qst::oracle
