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

#include <functional>
#include <limits>

#include <Eigen/Dense>

namespace qst {

struct OdeOptions {
  double rtol = 1e-9;
  double atol = 1e-12;
  // 0 picks 1% of the interval being integrated.
  double initial_step = 0.0;
  double max_step = std::numeric_limits<double>::infinity();
  long max_steps = 5'000'000;
};

struct OdeStats {
  long accepted = 0;
  long rejected = 0;
  long rhs_evaluations = 0;
};

/// Explicit embedded Runge-Kutta 5(4) pair of Dormand and Prince with
/// FSAL and a PI step-size controller, on a real state vector.
///
/// The integrator keeps its step size between calls to `advance`, so
/// marching through an output grid does not pay a restart per point.
class DormandPrince {
 public:
  using Rhs = std::function<void(double t, const Eigen::VectorXd& y,
                                 Eigen::VectorXd& dydt)>;
  // Applied to every accepted state, e.g. to project back onto a manifold.
  using StepHook = std::function<void(Eigen::VectorXd& y)>;

  DormandPrince(Rhs rhs, OdeOptions options, StepHook hook = {});

  /// Integrates y from t to t_end in place (t_end >= t). Throws
  /// NumericalError if the step size collapses or max_steps is exceeded.
  void advance(double& t, Eigen::VectorXd& y, double t_end);

  const OdeStats& stats() const noexcept { return stats_; }

 private:
  double error_norm(const Eigen::VectorXd& y, const Eigen::VectorXd& y_new,
                    const Eigen::VectorXd& err) const;

  Rhs rhs_;
  OdeOptions options_;
  StepHook hook_;
  OdeStats stats_;
  double step_ = 0.0;
  double previous_error_ = 1e-4;
  bool fsal_valid_ = false;
  Eigen::VectorXd k1_, k2_, k3_, k4_, k5_, k6_, k7_, stage_, y_new_, err_;
};

/// One-shot convenience wrapper around DormandPrince.
Eigen::VectorXd integrate(const DormandPrince::Rhs& rhs, Eigen::VectorXd y0,
                          double t0, double t1, const OdeOptions& options);

}  // namespace qst
