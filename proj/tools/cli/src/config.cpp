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

#include "qst/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qst/cli/format.hpp"
#include "qst/errors.hpp"

namespace qst::cli {

using nlohmann::json;

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json") return Format::kJson;
  throw UsageError("format must be csv or json, got '" + std::string(s) + "'");
}

ChainSpec RunConfig::spec() const {
  return ChainSpec(n, boundary, topology.value_or(Topology::kChained), xi,
                   gamma);
}

std::vector<int> RunConfig::sizes() const {
  return n_list.empty() ? std::vector<int>{n} : n_list;
}

std::vector<int> parse_n_list(std::string_view s) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const std::string_view item = s.substr(0, comma);
    const auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_int(item));
    } else {
      const int lo = parse_int(item.substr(0, dots));
      const int hi = parse_int(item.substr(dots + 2));
      if (hi < lo) {
        throw UsageError("empty range '" + std::string(item) + "'");
      }
      for (int k = lo; k <= hi; ++k) out.push_back(k);
    }
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
    if (s.empty()) throw UsageError("trailing comma in n-list");
  }
  if (out.empty()) throw UsageError("n-list is empty");
  return out;
}

namespace {

template <typename T>
T get(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw UsageError(std::string("config key '") + key + "' has the wrong type");
  }
}

}  // namespace

void apply_json(RunConfig& config, std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw UsageError("config must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    const char* k = key.c_str();
    if (key == "n") {
      config.n = get<int>(value, k);
    } else if (key == "n-list") {
      config.n_list = value.is_string()
                          ? parse_n_list(get<std::string>(value, k))
                          : get<std::vector<int>>(value, k);
    } else if (key == "boundary") {
      config.boundary = parse_boundary(get<std::string>(value, k));
    } else if (key == "topology") {
      config.topology = parse_topology(get<std::string>(value, k));
    } else if (key == "xi") {
      config.xi = get<double>(value, k);
    } else if (key == "gamma") {
      config.gamma = get<double>(value, k);
    } else if (key == "t-max") {
      config.t_max = get<double>(value, k);
    } else if (key == "grid") {
      config.grid = get<int>(value, k);
    } else if (key == "format") {
      config.format = parse_format(get<std::string>(value, k));
    } else if (key == "output") {
      config.output = get<std::string>(value, k);
    } else if (key == "meta") {
      config.meta = get<bool>(value, k);
    } else if (key == "max-n") {
      config.max_n = get<int>(value, k);
    } else if (key == "rtol") {
      config.rtol = get<double>(value, k);
    } else if (key == "atol") {
      config.atol = get<double>(value, k);
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

void apply_json_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  apply_json(config, text.str());
}

}  // namespace qst::cli
