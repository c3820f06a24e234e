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

#ifndef PVARLAB_ERROR_HPP
#define PVARLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pvarlab {

// Numeric values are shared with the C API status codes in pvarlab.h.
enum class ErrorCode : int {
  InvalidArgument = 1,
  BudgetExceeded = 2,
  Domain = 3,
  NotFound = 4,
  Precondition = 5,
  Numeric = 6,
  Io = 7,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace pvarlab

#endif  // PVARLAB_ERROR_HPP
