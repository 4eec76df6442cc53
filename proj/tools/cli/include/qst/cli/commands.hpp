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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qst/chain_model.hpp"
#include "qst/cli/config.hpp"
#include "qst/validation.hpp"

namespace qst::cli {

inline constexpr std::string_view kCurveHeader = "t,F_opt,rho,sigma_re,sigma_im";
inline constexpr std::string_view kSweepHeader =
    "n,boundary,topology,xi,gamma,t_star,f_max";
inline constexpr std::string_view kAnalyticHeader =
    "t,rho,sigma_re,sigma_im,f_closed_form,f_pipeline";

constexpr int kDefaultCurveGrid = 201;

struct CurveRow {
  double t = 0.0;
  double f_opt = 0.5;
  double rho = 0.0;
  double sigma_re = 0.0;
  double sigma_im = 0.0;

  bool operator==(const CurveRow&) const = default;
};

struct SweepRecord {
  int n = 0;
  Boundary boundary = Boundary::kOpen;
  Topology topology = Topology::kChained;
  double xi = 0.0;
  double gamma = 0.0;
  double t_star = 0.0;
  double f_max = 0.5;

  bool operator==(const SweepRecord&) const = default;
};

struct AnalyticRow {
  double t = 0.0;
  double rho = 0.0;
  double sigma_re = 0.0;
  double sigma_im = 0.0;
  double f_closed_form = 0.5;  // NaN where the printed formula is undefined
  double f_pipeline = 0.5;
};

/// Uniform grid of `grid` times on [0, t_max] with the last point exact.
std::vector<double> time_grid(double t_max, int grid);

std::vector<CurveRow> curve_rows(const RunConfig& config);
/// Rows ordered by n, then chained before local. Throws runtime_error if
/// any chain fails.
std::vector<SweepRecord> sweep_rows(const RunConfig& config);
/// Three-qubit closed forms; throws UsageError unless n = 3.
std::vector<AnalyticRow> analytic_rows(const RunConfig& config);

std::string render_curve(const std::vector<CurveRow>& rows, Format format);
std::string render_sweep(const std::vector<SweepRecord>& rows, Format format);
std::string render_analytic(const std::vector<AnalyticRow>& rows,
                            Format format);
std::string render_validation(const validation::ValidationReport& report,
                              const RunConfig& config);
std::string render_generator(const ChainSpec& spec);

/// CSV readers for the files written above. Lines starting with '#' are
/// skipped; a wrong header or field count is a UsageError.
std::vector<CurveRow> parse_curve_csv(std::string_view text);
std::vector<SweepRecord> parse_sweep_csv(std::string_view text);
std::vector<AnalyticRow> parse_analytic_csv(std::string_view text);

/// Entry point of the command-line tool. Returns 0 on success, 1 on usage
/// errors and 2 on numerical failures or failed validation gates.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace qst::cli
