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


#ifndef PVARLAB_KFUNCTIONAL_HPP
#define PVARLAB_KFUNCTIONAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pvarlab/sampled_function.hpp"

namespace pvarlab {

/// Continuous piecewise-linear function on [0, 1].
class PLFunction {
 public:
  PLFunction(std::vector<double> knots, std::vector<double> values);

  std::span<const double> knots() const noexcept { return knots_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator()(double x) const;

 private:
  std::vector<double> knots_;
  std::vector<double> values_;
};

enum class KnotCase { CaseI, CaseII };
const char* to_string(KnotCase c) noexcept;

struct KnotSelection {
  std::vector<double> knots;  // abscissas, 0 first and 1 last
  KnotCase knot_case = KnotCase::CaseII;
  double threshold = 0.0;  // upsilon_p(M, f) / M^{1/p}
  double upsilon = 0.0;    // upsilon_p(M, f)
};

/// Largest M allowed; the construction may place up to M knots.
inline constexpr std::int64_t kMaxKnotBudget = 10'000'000;

/// floor(1/t)^p rounded down to an integer, t in (0, 1].
std::int64_t kfunctional_M(double t, double p);

/// Threshold-crossing knots on the piecewise-linear model of f on [0, 1].
KnotSelection select_knots(const SampledFunction& f, std::int64_t M, double p);

/// Interpolates f at the given increasing abscissas inside its domain.
PLFunction pl_interpolate(const SampledFunction& f, std::span<const double> knots);

/// Exact p-variation of a piecewise-linear function (attained on its knots).
double varp_pl(const PLFunction& g, double p);

/// max |f - g| over [0, 1], attained at the union of both breakpoint sets.
double sup_distance(const SampledFunction& f, const PLFunction& g);

/// ||f - g||_inf + t Var_p(g) for a competitor g.
double kfunctional_objective(const SampledFunction& f, const PLFunction& g, double t, double p);

struct KSandwich {
  double t = 0.0;
  std::int64_t M = 0;
  double lower = 0.0;
  double upper = 0.0;
  double ratio = 0.0;  // upper / lower, +inf when lower = 0
  KnotCase knot_case = KnotCase::CaseII;
  double upsilon = 0.0;    // upsilon_p(M, f)
  double var_g = 0.0;      // Var_p(g_M)
  double sup_error = 0.0;  // ||f - g_M||_inf
  std::size_t knot_count = 0;
};

/// Builds g_M and both sides of the estimate. Throws ErrorCode::Numeric when
/// Var_p(g_M) exceeds upsilon_p(M, f) or ||f - g_M|| exceeds twice the
/// threshold; either would be a defect in the construction.
KSandwich kfunctional_bounds(const SampledFunction& f, double t, double p);

/// One sandwich per t, computed on up to `jobs` threads, in input order.
std::vector<KSandwich> kfunctional_sweep(const SampledFunction& f, std::span<const double> t_grid,
                                         double p, unsigned jobs = 1);

}  // namespace pvarlab

#endif  // PVARLAB_KFUNCTIONAL_HPP
