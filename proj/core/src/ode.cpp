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

#include "qst/ode.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qst/errors.hpp"

namespace qst {
namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b_hat
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

constexpr double kSafety = 0.9;
constexpr double kMinFactor = 0.2;
constexpr double kMaxFactor = 10.0;
constexpr double kAlpha = 0.7 / 5.0;
constexpr double kBeta = 0.4 / 5.0;

}  // namespace

DormandPrince::DormandPrince(Rhs rhs, OdeOptions options, StepHook hook)
    : rhs_(std::move(rhs)), options_(options), hook_(std::move(hook)) {
  if (!(options_.rtol > 0.0) || !(options_.atol >= 0.0)) {
    throw UsageError("ODE tolerances must be positive");
  }
}

double DormandPrince::error_norm(const Eigen::VectorXd& y,
                                 const Eigen::VectorXd& y_new,
                                 const Eigen::VectorXd& err) const {
  const Eigen::ArrayXd scale =
      options_.atol +
      options_.rtol * y.array().abs().max(y_new.array().abs());
  const Eigen::Index n = std::max<Eigen::Index>(err.size(), 1);
  return std::sqrt((err.array() / scale).square().sum() / n);
}

void DormandPrince::advance(double& t, Eigen::VectorXd& y, double t_end) {
  if (t_end < t) throw UsageError("integration must run forward in time");
  if (t_end == t) return;

  const Eigen::Index n = y.size();
  if (k1_.size() != n) {
    for (auto* v : {&k1_, &k2_, &k3_, &k4_, &k5_, &k6_, &k7_, &stage_,
                    &y_new_, &err_}) {
      v->resize(n);
    }
    fsal_valid_ = false;
  }
  if (!fsal_valid_) {
    rhs_(t, y, k1_);
    ++stats_.rhs_evaluations;
    fsal_valid_ = true;
  }
  if (step_ <= 0.0) {
    step_ = options_.initial_step > 0.0 ? options_.initial_step
                                        : 0.01 * (t_end - t);
  }

  long steps = 0;
  while (t < t_end) {
    if (++steps > options_.max_steps) {
      throw NumericalError("Runge-Kutta step budget exhausted", t, step_,
                           stats_.accepted);
    }
    double h = std::min(step_, options_.max_step);
    bool last = false;
    if (t + h >= t_end) {
      h = t_end - t;
      last = true;
    }
    const double h_min = 16.0 * std::numeric_limits<double>::epsilon() *
                         std::max(std::abs(t), 1.0);
    if (h < h_min && !last) {
      throw NumericalError("Runge-Kutta step size underflow", t, h,
                           stats_.accepted);
    }

    stage_ = y + h * a21 * k1_;
    rhs_(t + c2 * h, stage_, k2_);
    stage_ = y + h * (a31 * k1_ + a32 * k2_);
    rhs_(t + c3 * h, stage_, k3_);
    stage_ = y + h * (a41 * k1_ + a42 * k2_ + a43 * k3_);
    rhs_(t + c4 * h, stage_, k4_);
    stage_ = y + h * (a51 * k1_ + a52 * k2_ + a53 * k3_ + a54 * k4_);
    rhs_(t + c5 * h, stage_, k5_);
    stage_ = y + h * (a61 * k1_ + a62 * k2_ + a63 * k3_ + a64 * k4_ +
                      a65 * k5_);
    rhs_(t + h, stage_, k6_);
    y_new_ = y + h * (b1 * k1_ + b3 * k3_ + b4 * k4_ + b5 * k5_ + b6 * k6_);
    rhs_(t + h, y_new_, k7_);
    stats_.rhs_evaluations += 6;

    err_ = h * (e1 * k1_ + e3 * k3_ + e4 * k4_ + e5 * k5_ + e6 * k6_ +
                e7 * k7_);
    const double err = error_norm(y, y_new_, err_);
    if (!std::isfinite(err)) {
      throw NumericalError("non-finite Runge-Kutta error estimate", t, h,
                           stats_.accepted);
    }

    if (err <= 1.0) {
      const double e = std::max(err, 1e-10);
      double factor = kSafety * std::pow(e, -kAlpha) *
                      std::pow(previous_error_, kBeta);
      factor = std::clamp(factor, kMinFactor, kMaxFactor);
      previous_error_ = e;
      t = last ? t_end : t + h;
      y.swap(y_new_);
      if (hook_) {
        hook_(y);
        rhs_(t, y, k1_);
        ++stats_.rhs_evaluations;
      } else {
        k1_.swap(k7_);
      }
      ++stats_.accepted;
      // A clipped final step says nothing about the natural step size.
      if (!last) step_ = h * factor;
    } else {
      const double factor =
          std::max(kMinFactor, kSafety * std::pow(err, -1.0 / 5.0));
      step_ = h * factor;
      ++stats_.rejected;
    }
  }
}

Eigen::VectorXd integrate(const DormandPrince::Rhs& rhs, Eigen::VectorXd y0,
                          double t0, double t1, const OdeOptions& options) {
  DormandPrince solver(rhs, options);
  double t = t0;
  solver.advance(t, y0, t1);
  return y0;
}

}  // namespace qst
