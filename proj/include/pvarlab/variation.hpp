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

#ifndef PVARLAB_VARIATION_HPP
#define PVARLAB_VARIATION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pvarlab/modulus.hpp"
#include "pvarlab/sampled_function.hpp"

namespace pvarlab {

/// Grid-index interval [start, end] with |f(x_end) - f(x_start)|.
struct Interval {
  std::size_t start;
  std::size_t end;
  double difference;
};

/// Ordered, pairwise nonoverlapping intervals (previous end <= next start).
struct IntervalSelection {
  std::vector<Interval> intervals;
  double p = 1.0;

  /// (sum of difference^p)^{1/p}
  double objective() const;
  bool nonoverlapping() const;
};

struct PVariationResult {
  double value = 0.0;
  IntervalSelection selection;
};

/// Grid sizes and interval counts accepted by pvariation_bruteforce.
inline constexpr std::size_t kBruteforceMaxPoints = 15;
inline constexpr int kBruteforceMaxIntervals = 6;

/// Exhaustive maximum over every selection of at most n nonoverlapping grid
/// intervals. Throws ErrorCode::BudgetExceeded outside the enumeration budget.
PVariationResult pvariation_bruteforce(const SampledFunction& f, double p, int n);

/// Exact grid-restricted modulus of p-variation upsilon_p(n, f) by dynamic
/// programming over suffixes, with a backtracked optimal selection. Ties are
/// broken toward the lexicographically smallest (start, end) sequence.
PVariationResult pvariation_dp(const SampledFunction& f, double p, int n);

/// Value-only variant on a bare value sequence; O(len) memory per column.
double pvariation_value(std::span<const double> values, double p, std::int64_t n);

/// Indices kept by extrema reduction: first, last and interior strict local
/// extrema after plateaus collapse to their first point.
std::vector<std::size_t> extrema_indices(std::span<const double> values);
SampledFunction extrema_reduce(const SampledFunction& f);

/// (upsilon_p(1, f), ..., upsilon_p(n_max, f)) from one sweep.
std::vector<double> pvariation_profile(const SampledFunction& f, double p, std::int64_t n_max);
std::vector<double> pvariation_profile(std::span<const double> values, double p,
                                       std::int64_t n_max);

/// Supremum over all n, i.e. the p-variation of the sampled data.
double full_pvariation(std::span<const double> values, double p);

struct VpNuNorm {
  double variation = 0.0;  // sup_{n <= n_max} upsilon_p(n, f) / nu(n)
  double sup = 0.0;        // sup |f|
  double norm() const { return variation + sup; }
};

VpNuNorm vpnu_norm(const SampledFunction& f, const ModulusOfVariation& nu, double p,
                   std::int64_t n_max);

/// A nonnegative step function made of plateaus separated by zeros: `count`
/// pulses of each `height`. Every pulse contributes two jumps of its height.
struct PulseGroup {
  double height;
  std::int64_t count;
};

struct PulseTrain {
  std::vector<PulseGroup> groups;

  std::int64_t jump_count() const;
  /// 0, h, 0, h, ..., 0 in group order.
  std::vector<double> to_values() const;
};

/// Exact upsilon_p(n, .) of a pulse train: the l_p norm of its n largest
/// jumps. Any interval's difference is dominated by a distinct jump it
/// contains, and the jumps themselves are attainable.
double pvariation_pulse_train(const PulseTrain& train, double p, std::int64_t n);

}  // namespace pvarlab

#endif  // PVARLAB_VARIATION_HPP
