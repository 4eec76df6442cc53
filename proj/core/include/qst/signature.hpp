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

namespace qst {

/// Input-independent description of the output qubit. With the input
/// cos(theta/2)|0> + sin(theta/2) e^{i phi}|1>, the output qubit has excited
/// population rho * sin^2(theta/2) and coherence <1|rho_o|0> equal to
/// sigma * sin(theta) * e^{i phi}.
struct OutputSignature {
  double rho = 0.0;
  std::complex<double> sigma{0.0, 0.0};
};

}  // namespace qst
