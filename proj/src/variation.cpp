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

#include "pvarlab/variation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pvarlab/error.hpp"
#include "pvarlab/tolerance.hpp"

namespace pvarlab {

namespace {

void check_p(double p) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument,
          "p-variation: p must be a finite real >= 1");
}

double pow_abs(double d, double p) {
  d = std::abs(d);
  return p == 1.0 ? d : std::pow(d, p);
}

double root(double s, double p) {
  if (s <= 0.0) return 0.0;
  return p == 1.0 ? s : std::pow(s, 1.0 / p);
}

// |v_b - v_a|^p, cached as a dense matrix for moderate sizes.
class PowerDifferences {
 public:
  PowerDifferences(std::span<const double> v, double p) : v_(v), p_(p) {
    if (v.size() <= kDenseLimit) {
      const std::size_t n = v.size();
      dense_.resize(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) dense_[a * n + b] = pow_abs(v[b] - v[a], p);
    }
  }

  double operator()(std::size_t a, std::size_t b) const {
    if (!dense_.empty()) return dense_[a * v_.size() + b];
    return pow_abs(v_[b] - v_[a], p_);
  }

 private:
  static constexpr std::size_t kDenseLimit = 2048;
  std::span<const double> v_;
  double p_;
  std::vector<double> dense_;
};

// One DP column: best sum of powers with <= k intervals on each suffix, given
// the column for k - 1.
void advance_column(const PowerDifferences& d, std::span<const double> prev,
                    std::span<double> cur) {
  const std::size_t n = prev.size();
  cur[n - 1] = 0.0;
  for (std::size_t i = n - 1; i-- > 0;) {
    double best = cur[i + 1];
    for (std::size_t b = i + 1; b < n; ++b) best = std::max(best, d(i, b) + prev[b]);
    cur[i] = best;
  }
}

struct BruteState {
  std::span<const double> v;
  double p;
  int n;
  std::vector<Interval> current;
  double current_sum = 0.0;
  double best_sum = 0.0;
  std::vector<Interval> best;
};

void enumerate(BruteState& s, std::size_t start_min) {
  if (static_cast<int>(s.current.size()) == s.n) return;
  const std::size_t len = s.v.size();
  for (std::size_t a = start_min; a + 1 < len; ++a) {
    for (std::size_t b = a + 1; b < len; ++b) {
      const double diff = std::abs(s.v[b] - s.v[a]);
      if (diff == 0.0) continue;
      const double term = pow_abs(diff, s.p);
      s.current.push_back({a, b, diff});
      s.current_sum += term;
      if (s.current_sum > s.best_sum + slack(s.current_sum, s.best_sum)) {
        s.best_sum = s.current_sum;
        s.best = s.current;
      }
      enumerate(s, b);
      s.current_sum -= term;
      s.current.pop_back();
    }
  }
}

}  // namespace

double IntervalSelection::objective() const {
  double s = 0.0;
  for (const auto& iv : intervals) s += pow_abs(iv.difference, p);
  return root(s, p);
}

bool IntervalSelection::nonoverlapping() const {
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    if (intervals[i].start >= intervals[i].end) return false;
    if (i > 0 && intervals[i - 1].end > intervals[i].start) return false;
  }
  return true;
}

PVariationResult pvariation_bruteforce(const SampledFunction& f, double p, int n) {
  check_p(p);
  require(n >= 1, ErrorCode::InvalidArgument, "p-variation: n must be >= 1");
  if (f.size() > kBruteforceMaxPoints || n > kBruteforceMaxIntervals) {
    fail(ErrorCode::BudgetExceeded,
         "pvariation_bruteforce: budget is " + std::to_string(kBruteforceMaxPoints) +
             " points and " + std::to_string(kBruteforceMaxIntervals) + " intervals, got " +
             std::to_string(f.size()) + " points and n=" + std::to_string(n));
  }
  BruteState s{f.values(), p, n, {}, 0.0, 0.0, {}};
  enumerate(s, 0);
  PVariationResult r;
  r.value = root(s.best_sum, p);
  r.selection = IntervalSelection{std::move(s.best), p};
  return r;
}

PVariationResult pvariation_dp(const SampledFunction& f, double p, int n) {
  check_p(p);
  require(n >= 1, ErrorCode::InvalidArgument, "p-variation: n must be >= 1");
  const auto v = f.values();
  const std::size_t len = v.size();
  const std::size_t k_max = std::min<std::size_t>(static_cast<std::size_t>(n), len - 1);
  const PowerDifferences d(v, p);

  // table[k][i]: best sum with <= k intervals on the suffix starting at i
  std::vector<std::vector<double>> table(k_max + 1, std::vector<double>(len, 0.0));
  for (std::size_t k = 1; k <= k_max; ++k) advance_column(d, table[k - 1], table[k]);

  PVariationResult r;
  r.value = root(table[k_max][0], p);
  r.selection.p = p;
  const double tol = slack(table[k_max][0], 0.0);
  std::size_t i = 0;
  std::size_t k = k_max;
  while (k > 0 && table[k][i] > tol) {
    const double target = table[k][i] - tol;
    bool found = false;
    for (std::size_t a = i; a + 1 < len && !found; ++a) {
      for (std::size_t b = a + 1; b < len; ++b) {
        if (v[b] == v[a]) continue;
        if (d(a, b) + table[k - 1][b] >= target) {
          r.selection.intervals.push_back({a, b, std::abs(v[b] - v[a])});
          i = b;
          found = true;
          break;
        }
      }
    }
    if (!found) fail(ErrorCode::Numeric, "pvariation_dp: backtracking lost the optimum");
    --k;
  }
  return r;
}

std::vector<std::size_t> extrema_indices(std::span<const double> values) {
  const std::size_t len = values.size();
  std::vector<std::size_t> runs;  // first index of each plateau
  for (std::size_t i = 0; i < len; ++i)
    if (i == 0 || values[i] != values[i - 1]) runs.push_back(i);
  std::vector<std::size_t> keep;
  if (runs.size() <= 1) return {0, len - 1};
  keep.push_back(0);
  for (std::size_t j = 1; j + 1 < runs.size(); ++j) {
    const double left = values[runs[j]] - values[runs[j - 1]];
    const double right = values[runs[j + 1]] - values[runs[j]];
    if ((left > 0.0) != (right > 0.0)) keep.push_back(runs[j]);
  }
  keep.push_back(len - 1);
  return keep;
}

SampledFunction extrema_reduce(const SampledFunction& f) {
  const auto idx = extrema_indices(f.values());
  std::vector<double> g, v;
  g.reserve(idx.size());
  v.reserve(idx.size());
  for (auto i : idx) {
    g.push_back(f.grid()[i]);
    v.push_back(f.values()[i]);
  }
  if (f.is_periodic()) return SampledFunction::periodic(std::move(g), std::move(v), *f.period());
  return SampledFunction(std::move(g), std::move(v));
}

std::vector<double> pvariation_profile(std::span<const double> values, double p,
                                       std::int64_t n_max) {
  check_p(p);
  require(n_max >= 1 && n_max <= 100'000'000, ErrorCode::InvalidArgument,
          "p-variation profile: n_max must lie in [1, 1e8]");
  require(values.size() >= 2, ErrorCode::InvalidArgument,
          "p-variation profile: at least two samples required");
  std::vector<double> reduced;
  for (auto i : extrema_indices(values)) reduced.push_back(values[i]);
  const std::size_t len = reduced.size();
  const PowerDifferences d(reduced, p);
  std::vector<double> profile(static_cast<std::size_t>(n_max));
  std::vector<double> prev(len, 0.0), cur(len, 0.0);
  const auto k_cap = std::min<std::int64_t>(n_max, static_cast<std::int64_t>(len - 1));
  std::int64_t k = 1;
  for (; k <= k_cap; ++k) {
    advance_column(d, prev, cur);
    profile[static_cast<std::size_t>(k - 1)] = root(cur[0], p);
    const bool stable = cur == prev;
    std::swap(prev, cur);
    if (stable) break;
  }
  // beyond the last computed column the profile is constant
  const double last = root(prev[0], p);
  for (; k <= n_max; ++k) profile[static_cast<std::size_t>(k - 1)] = last;
  return profile;
}

std::vector<double> pvariation_profile(const SampledFunction& f, double p,
                                       std::int64_t n_max) {
  return pvariation_profile(f.values(), p, n_max);
}

double pvariation_value(std::span<const double> values, double p, std::int64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "p-variation: n must be >= 1");
  const std::int64_t cap = std::min<std::int64_t>(n, static_cast<std::int64_t>(values.size()));
  return pvariation_profile(values, p, cap).back();
}

double full_pvariation(std::span<const double> values, double p) {
  return pvariation_value(values, p, static_cast<std::int64_t>(values.size()));
}

VpNuNorm vpnu_norm(const SampledFunction& f, const ModulusOfVariation& nu, double p,
                   std::int64_t n_max) {
  require(n_max >= 1, ErrorCode::InvalidArgument, "vpnu_norm: n_max must be >= 1");
  // Past the reduced length the profile is flat and nu nondecreasing, so the
  // ratio cannot grow there.
  const auto reduced_len = static_cast<std::int64_t>(extrema_indices(f.values()).size());
  const std::int64_t k_cap = std::min<std::int64_t>(n_max, std::max<std::int64_t>(1, reduced_len - 1));
  const auto profile = pvariation_profile(f, p, k_cap);
  VpNuNorm out;
  for (std::int64_t k = 1; k <= k_cap; ++k)
    out.variation = std::max(out.variation, profile[static_cast<std::size_t>(k - 1)] / nu(k));
  out.sup = f.sup_abs();
  return out;
}

std::int64_t PulseTrain::jump_count() const {
  std::int64_t c = 0;
  for (const auto& g : groups) c += 2 * g.count;
  return c;
}

std::vector<double> PulseTrain::to_values() const {
  std::vector<double> v{0.0};
  for (const auto& g : groups)
    for (std::int64_t i = 0; i < g.count; ++i) {
      v.push_back(g.height);
      v.push_back(0.0);
    }
  return v;
}

double pvariation_pulse_train(const PulseTrain& train, double p, std::int64_t n) {
  check_p(p);
  require(n >= 1, ErrorCode::InvalidArgument, "p-variation: n must be >= 1");
  auto groups = train.groups;
  for (const auto& g : groups)
    require(g.height >= 0.0 && g.count >= 0, ErrorCode::InvalidArgument,
            "pulse train: heights and counts must be nonnegative");
  std::stable_sort(groups.begin(), groups.end(),
                   [](const PulseGroup& a, const PulseGroup& b) { return a.height > b.height; });
  double sum = 0.0;
  std::int64_t left = n;
  for (const auto& g : groups) {
    if (left == 0) break;
    const std::int64_t take = std::min(left, 2 * g.count);
    sum += static_cast<double>(take) * pow_abs(g.height, p);
    left -= take;
  }
  return root(sum, p);
}

}  // namespace pvarlab
