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

#include <Eigen/Dense>

namespace qst {

enum class ExpmMethod {
  kSpectral,            // G = V diag(lambda) V^-1, reused for every t
  kPadeScalingSquaring  // fallback when V is ill-conditioned
};

/// Evaluates exp(G t) and its action for many t with one factorisation.
///
/// The eigendecomposition is used only when the eigenvector basis has
/// 2-norm condition number below `max_condition`; otherwise every call falls
/// back to Pade scaling-and-squaring on G t. Both paths keep the relative
/// error of exp(G t) v near 1e-13 for the matrix sizes used here.
class ExponentialPropagator {
 public:
  static constexpr double kDefaultMaxCondition = 1e3;

  explicit ExponentialPropagator(Eigen::MatrixXcd generator,
                                 double max_condition = kDefaultMaxCondition);

  ExpmMethod method() const noexcept { return method_; }
  double condition() const noexcept { return condition_; }
  const Eigen::MatrixXcd& generator() const noexcept { return generator_; }

  Eigen::MatrixXcd exp(double t) const;
  Eigen::VectorXcd apply(double t, const Eigen::VectorXcd& v) const;

 private:
  Eigen::MatrixXcd generator_;
  ExpmMethod method_ = ExpmMethod::kPadeScalingSquaring;
  double condition_ = 0.0;
  Eigen::VectorXcd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
  Eigen::MatrixXcd eigenvectors_inverse_;
};

/// exp(G t) v. Throws UsageError when G is not square or v not conformable.
Eigen::VectorXcd matrix_exponential_action(const Eigen::MatrixXcd& generator,
                                           double t,
                                           const Eigen::VectorXcd& v);

}  // namespace qst
