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

#include "qst/analytic_3q.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qst/errors.hpp"

namespace qst::analytic {
namespace {

using cplx = std::complex<double>;

void require_time(double t) {
  if (!(t >= 0.0)) throw UsageError("time must be non-negative");
}

void require_rate(double gamma) {
  if (!(gamma > 0.0)) {
    throw DomainError(
        "closed form needs gamma > 0; use the dynamics engine for gamma = 0");
  }
}

// exp(-a) cosh(b) and exp(-a) sinh(b) without forming cosh(b) on its own.
double decayed_cosh(double a, double b) {
  return 0.5 * (std::exp(b - a) + std::exp(-b - a));
}
double decayed_sinh(double a, double b) {
  return 0.5 * (std::exp(b - a) - std::exp(-b - a));
}
cplx decayed_cosh(double a, cplx w) {
  return 0.5 * (std::exp(w - a) + std::exp(-w - a));
}
cplx decayed_sinh(double a, cplx w) {
  return 0.5 * (std::exp(w - a) - std::exp(-w - a));
}

}  // namespace

XYParams xy_params(double xi, double gamma) {
  require_rate(gamma);
  const double r = xi / gamma;
  const double r2 = r * r;
  const double radical = std::sqrt(81.0 + 112.0 * r2 + 64.0 * r2 * r2);
  XYParams p;
  p.x = std::sqrt(std::max(0.0, (9.0 - 8.0 * r2 + radical) / 2.0));
  p.y = std::sqrt(std::max(0.0, (-9.0 + 8.0 * r2 + radical) / 2.0));
  // The published y assumes xi >= 0; keep 2xy = 16 r for negative coupling.
  if (xi < 0.0) p.y = -p.y;
  return p;
}

OutputSignature open_chained_signature(double t, double xi, double gamma) {
  require_time(t);
  const auto [x, y] = xy_params(xi, gamma);
  const double gt = gamma * t;
  const double q = x * x + y * y;

  const double ch_half = decayed_cosh(2.5 * gt, gt * x / 2.0);
  const double sh_half = decayed_sinh(2.5 * gt, gt * x / 2.0);
  const double ch_full = decayed_cosh(3.0 * gt, gt * x);
  const double sh_full = decayed_sinh(3.0 * gt, gt * x);
  const double e3 = std::exp(-3.0 * gt);
  const double c_half = std::cos(gt * y / 2.0);
  const double s_half = std::sin(gt * y / 2.0);
  const double c_full = std::cos(gt * y);
  const double s_full = std::sin(gt * y);

  OutputSignature sig;
  sig.rho = 0.25 * (std::exp(-2.0 * gt) -
                    2.0 * (ch_half * c_half +
                           (y * ch_half * s_half + x * c_half * sh_half) / q) +
                    0.5 * (e3 * c_full + ch_full +
                           (2.0 * y * e3 * s_full + 2.0 * x * sh_full -
                            e3 * c_full + ch_full) /
                               q));

  const cplx z(x, y);
  const cplx w = 0.5 * gt * z;
  sig.sigma = -0.25 * std::exp(-gt) +
              0.25 * (decayed_cosh(1.5 * gt, w) +
                      decayed_sinh(1.5 * gt, w) / z);
  return sig;
}

double open_chained_fidelity(double t, double xi, double gamma) {
  require_time(t);
  const auto [x, y] = xy_params(xi, gamma);
  const double gt = gamma * t;
  const double q = x * x + y * y;
  const double e3 = std::exp(-3.0 * gt);

  const double inner =
      std::exp(-2.0 * gt) +
      0.5 * (e3 * std::cos(gt * y) + decayed_cosh(3.0 * gt, gt * x)) -
      2.0 * decayed_cosh(2.5 * gt, gt * x / 2.0) * std::cos(gt * y / 2.0) +
      (0.5 * (decayed_cosh(3.0 * gt, gt * x) - e3 * std::cos(gt * y)) +
       x * decayed_sinh(3.0 * gt, gt * x / 2.0) +
       y * e3 * std::sin(gt * y / 2.0) -
       2.0 * (x * decayed_sinh(2.5 * gt, gt * x / 2.0) * std::cos(gt * y / 2.0) +
              y * decayed_cosh(2.5 * gt, gt * x / 2.0) *
                  std::sin(gt * y / 2.0))) /
          q;
  // Negative radicand: the printed expression is undefined there.
  if (inner < 0.0) return std::nan("");
  const double b = std::sqrt(inner) + 1.0;
  return 0.5 + b * b / 24.0 - 1.0 / 24.0;
}

OutputSignature open_local_signature(double t, double xi, double gamma) {
  require_time(t);
  const double s = std::sin(xi * t / std::numbers::sqrt2);
  const double s2 = s * s;
  OutputSignature sig;
  sig.rho = std::exp(-2.0 * gamma * t) * s2 * s2;
  sig.sigma = -0.5 * std::exp(-gamma * t) * s2;
  return sig;
}

double open_local_fidelity(double t, double xi, double gamma) {
  require_time(t);
  const double s = std::sin(xi * t / std::numbers::sqrt2);
  const double s2 = s * s;
  const double e = std::exp(-gamma * t);
  return 0.5 + e / 3.0 * s2 * (1.0 + e / 2.0 * s2);
}

OutputSignature closed_chained_signature(double t, double xi, double gamma) {
  require_time(t);
  const double gt = gamma * t;
  OutputSignature sig;
  sig.rho = std::exp(-2.0 * gt) / 9.0 *
            (1.0 + std::exp(-6.0 * gt) -
             2.0 * std::exp(-3.0 * gt) * std::cos(3.0 * t * xi));
  // Uniform mode decays at 4 gamma and rotates at -2 xi; the two others
  // decay at gamma and rotate at +xi.
  sig.sigma = (std::exp(cplx(-4.0 * gt, -2.0 * xi * t)) -
               std::exp(cplx(-gt, xi * t))) /
              6.0;
  return sig;
}

std::complex<double> closed_chained_sigma_printed(double t, double xi,
                                                  double gamma) {
  require_time(t);
  const cplx i(0.0, 1.0);
  return std::exp(2.0 * gamma * t * (i * xi - gamma)) / 6.0 *
         (std::exp(-6.0 * gamma * t * (i * xi + gamma)) - 1.0);
}

double closed_chained_fidelity(double t, double xi, double gamma) {
  require_time(t);
  const double gt = gamma * t;
  const double radicand = std::exp(-2.0 * gt) + std::exp(-8.0 * gt) -
                          2.0 * std::exp(-5.0 * gt) * std::cos(3.0 * t * xi);
  const double b = std::sqrt(std::max(0.0, radicand)) / 3.0 + 1.0;
  return b * b / 54.0 - 1.0 / 54.0 + 0.5;
}

OutputSignature closed_local_signature(double t, double xi, double gamma) {
  require_time(t);
  const double s = std::sin(1.5 * t * xi);
  OutputSignature sig;
  sig.rho = 4.0 / 9.0 * std::exp(-2.0 * gamma * t) * s * s;
  sig.sigma = cplx(0.0, -1.0 / 3.0) *
              std::exp(cplx(-gamma * t, -t * xi / 2.0)) * s;
  return sig;
}

double closed_local_fidelity(double t, double xi, double gamma) {
  require_time(t);
  const double s = std::sin(1.5 * t * xi);
  const double braces = 0.5 - 2.0 / 3.0 * s * s -
                        (5.0 + 4.0 * std::cos(3.0 * t * xi)) / 18.0;
  // The e^{gamma t} term of the braces is folded into the prefactor.
  return 0.5 - std::exp(-2.0 * gamma * t) / 3.0 * braces +
         2.0 / 9.0 * std::exp(-gamma * t) * std::abs(s);
}

}  // namespace qst::analytic
