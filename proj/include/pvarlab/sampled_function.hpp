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

#ifndef PVARLAB_SAMPLED_FUNCTION_HPP
#define PVARLAB_SAMPLED_FUNCTION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace pvarlab {

/// A real function known at finitely many abscissas.
///
/// Between grid points the function is modelled as the piecewise-linear
/// interpolant of the samples. Periodic functions carry their period; the
/// grid then covers at most one period.
class SampledFunction {
 public:
  SampledFunction(std::vector<double> grid, std::vector<double> values);

  static SampledFunction periodic(std::vector<double> grid, std::vector<double> values,
                                  double period);

  /// `values.size()` equally spaced samples on [a, b], endpoints included.
  static SampledFunction uniform(double a, double b, std::vector<double> values);

  std::span<const double> grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return grid_.size(); }
  bool is_periodic() const noexcept { return period_.has_value(); }
  std::optional<double> period() const noexcept { return period_; }
  double front() const noexcept { return grid_.front(); }
  double back() const noexcept { return grid_.back(); }

  /// Piecewise-linear evaluation; clamps outside [front, back].
  double operator()(double x) const;

  double sup_abs() const;

  SampledFunction scaled(double c) const;
  /// Pointwise sum on a shared grid.
  SampledFunction plus(const SampledFunction& other) const;

 private:
  SampledFunction(std::vector<double> grid, std::vector<double> values,
                  std::optional<double> period);

  std::vector<double> grid_;
  std::vector<double> values_;
  std::optional<double> period_;
};

/// `count` equally spaced points on [a, b] with both endpoints.
std::vector<double> linspace(double a, double b, std::size_t count);

}  // namespace pvarlab

#endif  // PVARLAB_SAMPLED_FUNCTION_HPP
