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

#include <string>
#include <string_view>

namespace qst::cli {

constexpr int kMaxSignificantDigits = 12;

/// Shortest representation that parses back to x, or x rounded to 12
/// significant digits when that is shorter. -0 prints as 0; NaN as "nan".
std::string format_number(double x);

/// The value format_number(x) parses back to.
double output_value(double x);

/// Strict full-string parse; throws UsageError on trailing garbage.
double parse_number(std::string_view s);
int parse_int(std::string_view s);

}  // namespace qst::cli
