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


#ifndef PVARLAB_FORMAT_HPP
#define PVARLAB_FORMAT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace pvarlab {

/// 12 significant digits, "C" locale, ".0" appended to integral values;
/// "inf", "-inf", "nan" for non-finite input.
std::string format_number(double x);

/// Shortest text that reads back to the same double (sample files).
std::string format_number_exact(double x);

using Cell = std::variant<double, std::int64_t, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Comma separated, header first, '\n' line ends. Strings containing a
/// comma or quote are quoted.
std::string to_csv(const Table& table);

}  // namespace pvarlab

#endif  // PVARLAB_FORMAT_HPP
