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

#include "qst/matrix_exponential.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include "qst/errors.hpp"

namespace qst {

ExponentialPropagator::ExponentialPropagator(Eigen::MatrixXcd generator,
                                             double max_condition)
    : generator_(std::move(generator)) {
  if (generator_.rows() != generator_.cols()) {
    throw UsageError("matrix exponential needs a square generator");
  }
  if (generator_.rows() == 0) {
    method_ = ExpmMethod::kSpectral;
    condition_ = 1.0;
    return;
  }
  if (!generator_.allFinite()) {
    throw UsageError("generator has non-finite entries");
  }

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(generator_, true);
  if (solver.info() != Eigen::Success) {
    condition_ = std::numeric_limits<double>::infinity();
    return;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(solver.eigenvectors());
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  condition_ = smin > 0.0 ? s(0) / smin
                          : std::numeric_limits<double>::infinity();
  if (!(condition_ < max_condition)) return;

  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  eigenvectors_inverse_ = eigenvectors_.partialPivLu().inverse();
  method_ = ExpmMethod::kSpectral;
}

Eigen::MatrixXcd ExponentialPropagator::exp(double t) const {
  if (t == 0.0) {
    return Eigen::MatrixXcd::Identity(generator_.rows(), generator_.cols());
  }
  if (method_ == ExpmMethod::kSpectral) {
    const Eigen::VectorXcd phases = (eigenvalues_ * t).array().exp();
    return eigenvectors_ * phases.asDiagonal() * eigenvectors_inverse_;
  }
  const Eigen::MatrixXcd scaled = generator_ * t;
  return scaled.exp();
}

Eigen::VectorXcd ExponentialPropagator::apply(double t,
                                              const Eigen::VectorXcd& v) const {
  if (v.size() != generator_.rows()) {
    throw UsageError("vector length does not match generator dimension");
  }
  if (t == 0.0) return v;
  if (method_ == ExpmMethod::kSpectral) {
    const Eigen::VectorXcd coeffs = eigenvectors_inverse_ * v;
    const Eigen::VectorXcd phases = (eigenvalues_ * t).array().exp();
    return eigenvectors_ * phases.cwiseProduct(coeffs);
  }
  return exp(t) * v;
}

Eigen::VectorXcd matrix_exponential_action(const Eigen::MatrixXcd& generator,
                                           double t,
                                           const Eigen::VectorXcd& v) {
  if (generator.rows() != generator.cols()) {
    throw UsageError("matrix exponential needs a square generator");
  }
  if (v.size() != generator.rows()) {
    throw UsageError("vector length does not match generator dimension");
  }
  return ExponentialPropagator(generator).apply(t, v);
}

}  // namespace qst
