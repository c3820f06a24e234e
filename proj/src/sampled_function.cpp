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

#include "pvarlab/sampled_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pvarlab/error.hpp"

namespace pvarlab {

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<double> values)
    : SampledFunction(std::move(grid), std::move(values), std::nullopt) {}

SampledFunction SampledFunction::periodic(std::vector<double> grid,
                                          std::vector<double> values, double period) {
  return SampledFunction(std::move(grid), std::move(values), period);
}

SampledFunction SampledFunction::uniform(double a, double b, std::vector<double> values) {
  auto grid = linspace(a, b, values.size());
  return SampledFunction(std::move(grid), std::move(values));
}

SampledFunction::SampledFunction(std::vector<double> grid, std::vector<double> values,
                                 std::optional<double> period)
    : grid_(std::move(grid)), values_(std::move(values)), period_(period) {
  require(grid_.size() == values_.size(), ErrorCode::InvalidArgument,
          "sampled function: grid has " + std::to_string(grid_.size()) +
              " points but values has " + std::to_string(values_.size()));
  require(grid_.size() >= 2, ErrorCode::InvalidArgument,
          "sampled function: at least two samples required");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    require(std::isfinite(grid_[i]), ErrorCode::InvalidArgument,
            "sampled function: non-finite abscissa at index " + std::to_string(i));
    require(std::isfinite(values_[i]), ErrorCode::InvalidArgument,
            "sampled function: non-finite value at index " + std::to_string(i));
    if (i > 0) {
      require(grid_[i] > grid_[i - 1], ErrorCode::InvalidArgument,
              "sampled function: grid not strictly increasing at index " +
                  std::to_string(i));
    }
  }
  if (period_) {
    require(std::isfinite(*period_) && *period_ > 0.0, ErrorCode::InvalidArgument,
            "sampled function: period must be positive");
    const double span = grid_.back() - grid_.front();
    require(span <= *period_ * (1.0 + 1e-12), ErrorCode::InvalidArgument,
            "sampled function: grid spans more than one period");
  }
}

double SampledFunction::operator()(double x) const {
  if (x <= grid_.front()) return values_.front();
  if (x >= grid_.back()) return values_.back();
  const auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
  const auto hi = static_cast<std::size_t>(it - grid_.begin());
  const auto lo = hi - 1;
  const double w = (x - grid_[lo]) / (grid_[hi] - grid_[lo]);
  return values_[lo] + w * (values_[hi] - values_[lo]);
}

double SampledFunction::sup_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

SampledFunction SampledFunction::scaled(double c) const {
  auto v = values_;
  for (auto& x : v) x *= c;
  return SampledFunction(grid_, std::move(v), period_);
}

SampledFunction SampledFunction::plus(const SampledFunction& other) const {
  require(other.grid_ == grid_, ErrorCode::InvalidArgument,
          "sampled function: sum requires identical grids");
  auto v = values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return SampledFunction(grid_, std::move(v), period_);
}

std::vector<double> linspace(double a, double b, std::size_t count) {
  require(count >= 2, ErrorCode::InvalidArgument, "linspace: need at least two points");
  std::vector<double> out(count);
  const double h = (b - a) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = a + h * static_cast<double>(i);
  out.back() = b;
  return out;
}

}  // namespace pvarlab
