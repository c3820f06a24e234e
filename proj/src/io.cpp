// Copyright 2026 The pvarlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pvarlab/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "pvarlab/error.hpp"
#include "pvarlab/format.hpp"

namespace pvarlab {

nlohmann::json json_number(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

nlohmann::json function_to_json(const SampledFunction& f) {
  nlohmann::json j;
  j["grid"] = std::vector<double>(f.grid().begin(), f.grid().end());
  j["values"] = std::vector<double>(f.values().begin(), f.values().end());
  j["periodic"] = f.is_periodic();
  j["period"] = f.period() ? nlohmann::json(*f.period()) : nlohmann::json(nullptr);
  return j;
}

SampledFunction function_from_json(const nlohmann::json& j) {
  try {
    auto grid = j.at("grid").get<std::vector<double>>();
    auto values = j.at("values").get<std::vector<double>>();
    const bool periodic = j.value("periodic", false);
    if (!periodic) return SampledFunction(std::move(grid), std::move(values));
    require(j.contains("period") && j["period"].is_number(), ErrorCode::InvalidArgument,
            "function json: periodic data needs a numeric period");
    return SampledFunction::periodic(std::move(grid), std::move(values), j["period"].get<double>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidArgument, std::string("function json: ") + e.what());
  }
}

std::string function_to_csv(const SampledFunction& f) {
  std::string out = "x,f\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out += format_number_exact(f.grid()[i]) + "," + format_number_exact(f.values()[i]) + "\n";
  return out;
}

namespace {

double parse_double(const std::string& s, std::size_t line) {
  std::istringstream is(s);
  is.imbue(std::locale::classic());
  double v = 0.0;
  is >> v;
  require(!is.fail() && (is >> std::ws).eof(), ErrorCode::InvalidArgument,
          "function csv: bad number '" + s + "' on line " + std::to_string(line));
  return v;
}

}  // namespace

SampledFunction function_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<double> grid, values;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      require(line == "x,f", ErrorCode::InvalidArgument, "function csv: header must be 'x,f'");
      continue;
    }
    const auto comma = line.find(',');
    require(comma != std::string::npos && line.find(',', comma + 1) == std::string::npos,
            ErrorCode::InvalidArgument,
            "function csv: expected two fields on line " + std::to_string(lineno));
    grid.push_back(parse_double(line.substr(0, comma), lineno));
    values.push_back(parse_double(line.substr(comma + 1), lineno));
  }
  require(header_seen, ErrorCode::InvalidArgument, "function csv: missing header");
  return SampledFunction(std::move(grid), std::move(values));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  require(!in.bad(), ErrorCode::Io, "cannot read '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::Io, "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  require(static_cast<bool>(out), ErrorCode::Io, "cannot write '" + path + "'");
}

SampledFunction load_function(const std::string& path) {
  const auto text = read_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorCode::InvalidArgument, "'" + path + "': " + e.what());
    }
    return function_from_json(j);
  }
  return function_from_csv(text);
}

}  // namespace pvarlab
