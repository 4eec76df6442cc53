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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qst/chain_model.hpp"

namespace qst::cli {

enum class Format { kCsv, kJson };

Format parse_format(std::string_view s);

/// Settings shared by every subcommand. Unset optionals fall back to the
/// per-command defaults.
struct RunConfig {
  int n = 3;
  std::vector<int> n_list;  // sweep only; empty means {n}
  Boundary boundary = Boundary::kOpen;
  std::optional<Topology> topology;  // sweep runs both when unset
  double xi = 1.0;
  double gamma = 0.0;
  std::optional<double> t_max;
  std::optional<int> grid;
  Format format = Format::kCsv;
  std::string output;  // empty writes to standard output
  bool meta = false;

  // validate
  int max_n = 5;
  double rtol = 1e-10;
  double atol = 1e-13;

  /// Chain for the single-chain commands; topology defaults to chained.
  ChainSpec spec() const;
  std::vector<int> sizes() const;
};

/// "3,4,5", "3..10" or a mix such as "3..5,8". Throws UsageError.
std::vector<int> parse_n_list(std::string_view s);

/// Overlays keys of a JSON object onto `config`. Keys are the long flag
/// names ("n", "n-list", "t-max", ...). Unknown keys are a UsageError.
void apply_json(RunConfig& config, std::string_view json_text);
void apply_json_file(RunConfig& config, const std::string& path);

}  // namespace qst::cli
