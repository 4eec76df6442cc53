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

#include <complex>

#include "qst/signature.hpp"

namespace qst {

/// Closed-form results for three-qubit chains. All functions take the time
/// t >= 0, coupling xi and rate gamma. Exponentials are grouped with the
/// growing hyperbolic factors before evaluation so large gamma*t is safe.
namespace analytic {

/// x, y with (x + i y)^2 = 9 - 8 r^2 + 16 i r, r = xi/gamma.
struct XYParams {
  double x = 0.0;
  double y = 0.0;
};

/// Throws DomainError for gamma <= 0.
XYParams xy_params(double xi, double gamma);

// Open chain, shared baths.
OutputSignature open_chained_signature(double t, double xi, double gamma);
/// Published fidelity closed form for the open chained chain, as printed.
double open_chained_fidelity(double t, double xi, double gamma);

// Open chain, one bath per qubit.
OutputSignature open_local_signature(double t, double xi, double gamma);
double open_local_fidelity(double t, double xi, double gamma);

// Ring, shared baths. The coherence uses the phase from the circulant
// eigendecomposition; closed_chained_sigma_printed keeps the published one.
OutputSignature closed_chained_signature(double t, double xi, double gamma);
std::complex<double> closed_chained_sigma_printed(double t, double xi,
                                                  double gamma);
double closed_chained_fidelity(double t, double xi, double gamma);

// Ring, one bath per qubit.
OutputSignature closed_local_signature(double t, double xi, double gamma);
double closed_local_fidelity(double t, double xi, double gamma);

}  // namespace analytic
}  // namespace qst
