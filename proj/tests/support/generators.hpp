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


// Hand-rolled generators for property tests.

#ifndef PVARLAB_TESTS_GENERATORS_HPP
#define PVARLAB_TESTS_GENERATORS_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "pvarlab/sampled_function.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

  std::vector<double> values(std::size_t n, double lo = -1.0, double hi = 1.0) {
    std::vector<double> v(n);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  // Mixture of shapes: noise, plateaus with repeated values, and monotone runs.
  std::vector<double> shaped_values(std::size_t n) {
    std::vector<double> v(n);
    const auto mode = integer(0, 3);
    for (std::size_t i = 0; i < n; ++i) {
      switch (mode) {
        case 0: v[i] = uniform(-1.0, 1.0); break;
        case 1: v[i] = static_cast<double>(integer(-2, 2)); break;  // ties
        case 2: v[i] = (i == 0 ? 0.0 : v[i - 1]) + uniform(-0.2, 1.0); break;
        default: v[i] = std::sin(3.0 * static_cast<double>(i)) + uniform(-0.1, 0.1); break;
      }
    }
    return v;
  }

  pvarlab::SampledFunction function(std::size_t n) {
    return pvarlab::SampledFunction::uniform(0.0, 1.0, shaped_values(n));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gen

#endif  // PVARLAB_TESTS_GENERATORS_HPP
