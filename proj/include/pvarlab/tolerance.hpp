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

#ifndef PVARLAB_TOLERANCE_HPP
#define PVARLAB_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace pvarlab {

/// Absolute-plus-relative slack used by every comparison in the library.
inline constexpr double kTolerance = 1e-12;

inline double slack(double a, double b, double tol = kTolerance) {
  return tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

inline bool approx_le(double a, double b, double tol = kTolerance) {
  return a <= b + slack(a, b, tol);
}

inline bool approx_eq(double a, double b, double tol = kTolerance) {
  return std::abs(a - b) <= slack(a, b, tol);
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace pvarlab

#endif  // PVARLAB_TOLERANCE_HPP
