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

#include "qst/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qst/analytic_3q.hpp"
#include "qst/cli/format.hpp"
#include "qst/errors.hpp"
#include "qst/fidelity.hpp"

#ifndef QST_VERSION
#define QST_VERSION "unknown"
#endif

namespace qst::cli {

using nlohmann::ordered_json;

namespace {

ordered_json value(double x) { return output_value(x); }

ordered_json matrix_json(const Eigen::MatrixXd& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(value(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string join_csv(std::initializer_list<std::string> fields) {
  std::string line;
  for (const auto& f : fields) {
    if (!line.empty()) line += ',';
    line += f;
  }
  line += '\n';
  return line;
}

std::vector<std::vector<std::string_view>> read_csv(std::string_view text,
                                                    std::string_view header) {
  std::vector<std::vector<std::string_view>> rows;
  bool seen_header = false;
  const std::size_t width =
      static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) +
      1;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!seen_header) {
      if (line != header) {
        throw UsageError("unexpected CSV header '" + std::string(line) + "'");
      }
      seen_header = true;
      continue;
    }
    std::vector<std::string_view> fields;
    while (true) {
      const auto comma = line.find(',');
      fields.push_back(line.substr(0, comma));
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (fields.size() != width) {
      throw UsageError("CSV row has " + std::to_string(fields.size()) +
                       " fields, expected " + std::to_string(width));
    }
    rows.push_back(std::move(fields));
  }
  if (!seen_header) throw UsageError("CSV header missing");
  return rows;
}

using SignatureFn = std::function<OutputSignature(double, double, double)>;
using FidelityFn = std::function<double(double, double, double)>;

std::pair<SignatureFn, FidelityFn> closed_forms(const ChainSpec& spec) {
  const bool open = spec.boundary() == Boundary::kOpen;
  if (spec.topology() == Topology::kChained) {
    if (open) {
      return {analytic::open_chained_signature, analytic::open_chained_fidelity};
    }
    return {analytic::closed_chained_signature,
            analytic::closed_chained_fidelity};
  }
  if (open) return {analytic::open_local_signature, analytic::open_local_fidelity};
  return {analytic::closed_local_signature, analytic::closed_local_fidelity};
}

ordered_json spec_json(const ChainSpec& s) {
  return {{"n", s.n_qubits()},
          {"boundary", to_string(s.boundary())},
          {"topology", to_string(s.topology())},
          {"xi", value(s.coupling())},
          {"gamma", value(s.rate())}};
}

}  // namespace

std::vector<double> time_grid(double t_max, int grid) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw UsageError("t-max must be positive and finite");
  }
  if (grid < 2) throw UsageError("grid must be at least 2");
  std::vector<double> t(static_cast<std::size_t>(grid));
  for (int i = 0; i < grid; ++i) t[i] = t_max * i / (grid - 1);
  t.back() = t_max;
  return t;
}

std::vector<CurveRow> curve_rows(const RunConfig& config) {
  const ChainSpec spec = config.spec();
  const SignatureTracker tracker(spec);
  std::vector<CurveRow> rows;
  for (double t : time_grid(config.t_max.value_or(default_t_max(spec)),
                            config.grid.value_or(kDefaultCurveGrid))) {
    const OutputSignature sig = tracker.at(t);
    rows.push_back({t, optimal_average_fidelity(sig), sig.rho,
                    sig.sigma.real(), sig.sigma.imag()});
  }
  return rows;
}

std::vector<SweepRecord> sweep_rows(const RunConfig& config) {
  std::vector<Topology> topologies = {Topology::kChained, Topology::kLocal};
  if (config.topology) topologies = {*config.topology};
  std::vector<ChainSpec> specs;
  for (int n : config.sizes()) {
    for (Topology t : topologies) {
      specs.emplace_back(n, config.boundary, t, config.xi, config.gamma);
    }
  }
  const auto results =
      sweep(specs, config.t_max, config.grid.value_or(kDefaultGrid));
  std::vector<SweepRecord> rows;
  for (const SweepRow& r : results) {
    if (!r.ok()) {
      throw std::runtime_error("n=" + std::to_string(r.spec.n_qubits()) +
                               " " + std::string(to_string(r.spec.topology())) +
                               ": " + r.error);
    }
    rows.push_back({r.spec.n_qubits(), r.spec.boundary(), r.spec.topology(),
                    r.spec.coupling(), r.spec.rate(), r.t_star, r.f_max});
  }
  return rows;
}

std::vector<AnalyticRow> analytic_rows(const RunConfig& config) {
  if (config.n != 3) {
    throw UsageError("analytic closed forms exist for n = 3 only");
  }
  const ChainSpec spec = config.spec();
  const auto [signature, fidelity] = closed_forms(spec);
  std::vector<AnalyticRow> rows;
  for (double t : time_grid(config.t_max.value_or(default_t_max(spec)),
                            config.grid.value_or(kDefaultCurveGrid))) {
    const OutputSignature sig = signature(t, spec.coupling(), spec.rate());
    rows.push_back({t, sig.rho, sig.sigma.real(), sig.sigma.imag(),
                    fidelity(t, spec.coupling(), spec.rate()),
                    optimal_average_fidelity(sig)});
  }
  return rows;
}

std::string render_curve(const std::vector<CurveRow>& rows, Format format) {
  if (format == Format::kJson) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"t", value(r.t)},
                   {"F_opt", value(r.f_opt)},
                   {"rho", value(r.rho)},
                   {"sigma_re", value(r.sigma_re)},
                   {"sigma_im", value(r.sigma_im)}});
    }
    return ordered_json{{"rows", j}}.dump(2) + "\n";
  }
  std::string s = std::string(kCurveHeader) + "\n";
  for (const auto& r : rows) {
    s += join_csv({format_number(r.t), format_number(r.f_opt),
                   format_number(r.rho), format_number(r.sigma_re),
                   format_number(r.sigma_im)});
  }
  return s;
}

std::string render_sweep(const std::vector<SweepRecord>& rows,
                         Format format) {
  if (format == Format::kJson) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"boundary", to_string(r.boundary)},
                   {"topology", to_string(r.topology)},
                   {"xi", value(r.xi)},
                   {"gamma", value(r.gamma)},
                   {"t_star", value(r.t_star)},
                   {"f_max", value(r.f_max)}});
    }
    return ordered_json{{"rows", j}}.dump(2) + "\n";
  }
  std::string s = std::string(kSweepHeader) + "\n";
  for (const auto& r : rows) {
    s += join_csv({std::to_string(r.n), std::string(to_string(r.boundary)),
                   std::string(to_string(r.topology)), format_number(r.xi),
                   format_number(r.gamma), format_number(r.t_star),
                   format_number(r.f_max)});
  }
  return s;
}

std::string render_analytic(const std::vector<AnalyticRow>& rows,
                            Format format) {
  if (format == Format::kJson) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"t", value(r.t)},
                   {"rho", value(r.rho)},
                   {"sigma_re", value(r.sigma_re)},
                   {"sigma_im", value(r.sigma_im)},
                   {"f_closed_form", value(r.f_closed_form)},
                   {"f_pipeline", value(r.f_pipeline)}});
    }
    return ordered_json{{"rows", j}}.dump(2) + "\n";
  }
  std::string s = std::string(kAnalyticHeader) + "\n";
  for (const auto& r : rows) {
    s += join_csv({format_number(r.t), format_number(r.rho),
                   format_number(r.sigma_re), format_number(r.sigma_im),
                   format_number(r.f_closed_form),
                   format_number(r.f_pipeline)});
  }
  return s;
}

std::string render_validation(const validation::ValidationReport& report,
                              const RunConfig& config) {
  using validation::CheckStatus;
  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"group", c.group},
                      {"gating", c.gating},
                      {"status", validation::to_string(c.status)},
                      {"max_deviation", value(c.max_deviation)},
                      {"threshold", value(c.threshold)},
                      {"detail", c.detail}});
  }
  const ordered_json doc = {
      {"gates_passed", report.gates_passed()},
      {"max_n", config.max_n},
      {"rtol", value(config.rtol)},
      {"atol", value(config.atol)},
      {"summary",
       {{"pass", report.count(CheckStatus::kPass)},
        {"fail", report.count(CheckStatus::kFail)},
        {"erratum-candidate", report.count(CheckStatus::kErratumCandidate)}}},
      {"checks", checks}};
  return doc.dump(2) + "\n";
}

std::string render_generator(const ChainSpec& spec) {
  const EffectiveGenerator g = effective_generator(spec);
  ordered_json doc = spec_json(spec);
  doc["output_index"] = output_index(spec);
  doc["h"] = matrix_json(g.hop);
  doc["M"] = matrix_json(g.dissipation);
  doc["G"] = {{"re", matrix_json(g.generator.real())},
              {"im", matrix_json(g.generator.imag())}};
  return doc.dump(2) + "\n";
}

std::vector<CurveRow> parse_curve_csv(std::string_view text) {
  std::vector<CurveRow> rows;
  for (const auto& f : read_csv(text, kCurveHeader)) {
    rows.push_back({parse_number(f[0]), parse_number(f[1]),
                    parse_number(f[2]), parse_number(f[3]),
                    parse_number(f[4])});
  }
  return rows;
}

std::vector<SweepRecord> parse_sweep_csv(std::string_view text) {
  std::vector<SweepRecord> rows;
  for (const auto& f : read_csv(text, kSweepHeader)) {
    rows.push_back({parse_int(f[0]), parse_boundary(f[1]),
                    parse_topology(f[2]), parse_number(f[3]),
                    parse_number(f[4]), parse_number(f[5]),
                    parse_number(f[6])});
  }
  return rows;
}

std::vector<AnalyticRow> parse_analytic_csv(std::string_view text) {
  std::vector<AnalyticRow> rows;
  for (const auto& f : read_csv(text, kAnalyticHeader)) {
    rows.push_back({parse_number(f[0]), parse_number(f[1]),
                    parse_number(f[2]), parse_number(f[3]),
                    parse_number(f[4]), parse_number(f[5])});
  }
  return rows;
}

namespace {

// Flags are collected as text and merged over the config file as a JSON
// object, so file keys and flags go through one code path.
struct Flags {
  std::map<std::string, std::string> text;
  std::string config_path;
  bool meta = false;
};

void add_option(CLI::App* cmd, Flags& flags, const std::string& key,
                const std::string& help) {
  cmd->add_option_function<std::string>(
      "--" + key, [&flags, key](const std::string& v) { flags.text[key] = v; },
      help);
}

void add_chain_options(CLI::App* cmd, Flags& flags) {
  add_option(cmd, flags, "n", "number of qubits");
  add_option(cmd, flags, "boundary", "open or closed");
  add_option(cmd, flags, "topology", "chained or local");
  add_option(cmd, flags, "xi", "XY coupling");
  add_option(cmd, flags, "gamma", "dissipation rate");
}

void add_output_options(CLI::App* cmd, Flags& flags) {
  add_option(cmd, flags, "output", "output file (default: standard output)");
  cmd->add_option("--config", flags.config_path, "JSON config file");
  cmd->add_flag("--meta", flags.meta, "add run metadata to the output");
}

RunConfig build_config(const Flags& flags) {
  RunConfig config;
  if (!flags.config_path.empty()) apply_json_file(config, flags.config_path);
  nlohmann::json overlay = nlohmann::json::object();
  for (const auto& [key, v] : flags.text) {
    if (key == "n" || key == "grid" || key == "max-n") {
      overlay[key] = parse_int(v);
    } else if (key == "xi" || key == "gamma" || key == "t-max" ||
               key == "rtol" || key == "atol") {
      overlay[key] = parse_number(v);
    } else {
      overlay[key] = v;
    }
  }
  apply_json(config, overlay.dump());
  if (flags.meta) config.meta = true;
  return config;
}

std::string utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string with_meta(std::string body, bool json, int argc,
                      const char* const* argv) {
  std::string command = "qstransfer";
  for (int i = 1; i < argc; ++i) command += std::string(" ") + argv[i];
  if (json) {
    ordered_json doc = ordered_json::parse(body);
    doc["meta"] = {{"version", QST_VERSION},
                   {"command", command},
                   {"generated", utc_now()}};
    return doc.dump(2) + "\n";
  }
  return "# qstransfer " QST_VERSION "\n# command: " + command +
         "\n# generated: " + utc_now() + "\n" + body;
}

void emit(const std::string& body, const RunConfig& config, std::ostream& out) {
  if (config.output.empty()) {
    out << body;
    out.flush();
    return;
  }
  std::ofstream file(config.output, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + config.output + "'");
  file << body;
  if (!file.flush()) throw UsageError("cannot write '" + config.output + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quantum state transfer through dissipative XY chains",
               "qstransfer"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QST_VERSION);
  Flags flags;

  CLI::App* curve = app.add_subcommand("curve", "optimal fidelity along time");
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "maximal fidelity for a list of sizes");
  CLI::App* analytic =
      app.add_subcommand("analytic", "three-qubit closed forms");
  CLI::App* validate = app.add_subcommand("validate", "run the self-checks");
  CLI::App* generator =
      app.add_subcommand("generator", "dump h, M and G as JSON");

  for (CLI::App* cmd : {curve, sweep_cmd, analytic, generator}) {
    add_chain_options(cmd, flags);
  }
  for (CLI::App* cmd : {curve, sweep_cmd, analytic}) {
    add_option(cmd, flags, "t-max", "time horizon");
    add_option(cmd, flags, "grid", "number of grid times");
    add_option(cmd, flags, "format", "csv or json");
  }
  add_option(sweep_cmd, flags, "n-list", "sizes, e.g. 3..10 or 3,5,7");
  add_option(validate, flags, "max-n", "largest oracle size (3..6)");
  add_option(validate, flags, "rtol", "oracle relative tolerance");
  add_option(validate, flags, "atol", "oracle absolute tolerance");
  for (CLI::App* cmd : {curve, sweep_cmd, analytic, validate, generator}) {
    add_output_options(cmd, flags);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const RunConfig config = build_config(flags);
    std::string body;
    bool json = config.format == Format::kJson;
    int status = 0;
    if (curve->parsed()) {
      body = render_curve(curve_rows(config), config.format);
    } else if (sweep_cmd->parsed()) {
      body = render_sweep(sweep_rows(config), config.format);
    } else if (analytic->parsed()) {
      body = render_analytic(analytic_rows(config), config.format);
    } else if (validate->parsed()) {
      validation::ValidationOptions options;
      options.max_n = config.max_n;
      options.rtol = config.rtol;
      options.atol = config.atol;
      const auto report = validation::run_validation(options);
      body = render_validation(report, config);
      json = true;
      if (!report.gates_passed()) {
        err << "validation: gating checks failed\n";
        status = 2;
      }
    } else {
      body = render_generator(config.spec());
      json = true;
    }
    if (config.meta) body = with_meta(std::move(body), json, argc, argv);
    emit(body, config, out);
    return status;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qst::cli
