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


#ifndef PVARLAB_IO_HPP
#define PVARLAB_IO_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "pvarlab/sampled_function.hpp"

namespace pvarlab {

/// Non-finite numbers become the strings "inf", "-inf", "nan".
nlohmann::json json_number(double x);

/// {grid:[...], values:[...], periodic:bool, period:real|null}
nlohmann::json function_to_json(const SampledFunction& f);
SampledFunction function_from_json(const nlohmann::json& j);

/// Header `x,f`, one sample per line.
std::string function_to_csv(const SampledFunction& f);
SampledFunction function_from_csv(std::string_view text);

/// Chooses the format from the extension (.json, otherwise CSV).
/// ErrorCode::Io when the file cannot be read.
SampledFunction load_function(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace pvarlab

#endif  // PVARLAB_IO_HPP
