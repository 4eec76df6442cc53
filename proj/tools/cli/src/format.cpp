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

#include "qst/cli/format.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "qst/errors.hpp"

namespace qst::cli {
namespace {

int significant_digits(std::string_view s) {
  int digits = 0;
  bool leading = true;
  for (char c : s) {
    if (c == 'e' || c == 'E') break;
    if (c < '0' || c > '9') continue;
    if (leading && c == '0') continue;
    leading = false;
    ++digits;
  }
  return digits;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (x == 0.0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  std::string_view shortest(buf, static_cast<std::size_t>(res.ptr - buf));
  if (significant_digits(shortest) <= kMaxSignificantDigits) {
    return std::string(shortest);
  }
  res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                      kMaxSignificantDigits);
  std::string rounded(buf, static_cast<std::size_t>(res.ptr - buf));
  // Rounding can land on zero only for subnormal inputs; keep the sign out.
  if (rounded == "-0") rounded = "0";
  return rounded;
}

double output_value(double x) { return parse_number(format_number(x)); }

double parse_number(std::string_view s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  double value = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("not a number: '" + std::string(s) + "'");
  }
  return value;
}

int parse_int(std::string_view s) {
  int value = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) {
    throw UsageError("not an integer: '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace qst::cli
