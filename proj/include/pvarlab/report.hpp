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


#ifndef PVARLAB_REPORT_HPP
#define PVARLAB_REPORT_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pvarlab/format.hpp"

namespace pvarlab {

/// Result of one subcommand: a JSON document and the CSV view of it.
struct Output {
  nlohmann::json json;
  Table table;
  int status = 0;  // nonzero when a verify check failed
};

/// Subcommands: pvar, kfunc, fourier, embed, seqnorm, verify.
bool is_subcommand(std::string_view name);

/// Every violated constraint of `params` (keys are the long flag names, values
/// JSON numbers, strings or booleans). Empty when the request is valid.
std::vector<std::string> validate_params(std::string_view subcommand, const nlohmann::json& params);

/// Validates, then runs. Validation failures throw ErrorCode::InvalidArgument
/// with one constraint per line.
Output run_report(std::string_view subcommand, const nlohmann::json& params);

/// "csv" or "json"; JSON is indented by two spaces and ends with a newline.
std::string render(const Output& out, std::string_view format);

}  // namespace pvarlab

#endif  // PVARLAB_REPORT_HPP
