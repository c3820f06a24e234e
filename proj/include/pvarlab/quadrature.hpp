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


#ifndef PVARLAB_QUADRATURE_HPP
#define PVARLAB_QUADRATURE_HPP

#include <functional>

namespace pvarlab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;  // false if some panel hit the depth limit
};

/// Adaptive Simpson on [a, b] after splitting into `pieces` equal panels;
/// the absolute tolerance is shared out over the panels.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol = 1e-10, int pieces = 1, int max_depth = 48);

}  // namespace pvarlab

#endif  // PVARLAB_QUADRATURE_HPP
