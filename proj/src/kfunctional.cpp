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


#include "pvarlab/kfunctional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pvarlab/error.hpp"
#include "pvarlab/parallel.hpp"
#include "pvarlab/tolerance.hpp"
#include "pvarlab/variation.hpp"

namespace pvarlab {

namespace {

constexpr double kCrossingTol = 1e-12;
constexpr double kBoundTol = 1e-9;

void require_unit_domain(const SampledFunction& f) {
  require(std::abs(f.front()) <= kTolerance && std::abs(f.back() - 1.0) <= kTolerance,
          ErrorCode::InvalidArgument, "kfunctional: f must be sampled on [0, 1]");
}

void check_p(double p) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument,
          "kfunctional: p must be a finite real >= 1");
}

}  // namespace

PLFunction::PLFunction(std::vector<double> knots, std::vector<double> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  require(knots_.size() >= 2 && knots_.size() == values_.size(), ErrorCode::InvalidArgument,
          "PLFunction: need at least two knots with one value each");
  for (std::size_t i = 1; i < knots_.size(); ++i)
    require(knots_[i] > knots_[i - 1], ErrorCode::InvalidArgument,
            "PLFunction: knots must be strictly increasing (duplicate knot)");
}

double PLFunction::operator()(double x) const {
  if (x <= knots_.front()) return values_.front();
  if (x >= knots_.back()) return values_.back();
  const auto hi = static_cast<std::size_t>(std::upper_bound(knots_.begin(), knots_.end(), x) -
                                           knots_.begin());
  const auto lo = hi - 1;
  const double w = (x - knots_[lo]) / (knots_[hi] - knots_[lo]);
  return values_[lo] + w * (values_[hi] - values_[lo]);
}

const char* to_string(KnotCase c) noexcept { return c == KnotCase::CaseI ? "I" : "II"; }

std::int64_t kfunctional_M(double t, double p) {
  require(std::isfinite(t) && t > 0.0 && t <= 1.0, ErrorCode::InvalidArgument,
          "kfunctional: t must lie in (0, 1]");
  check_p(p);
  const double inv = std::floor(1.0 / t + 1e-12);
  const double m = std::floor(std::pow(inv, p) + 1e-9);
  if (!(m <= static_cast<double>(kMaxKnotBudget))) {
    std::ostringstream os;
    os << "kfunctional: M = floor(1/t)^p = " << m << " exceeds the knot budget " << kMaxKnotBudget;
    fail(ErrorCode::BudgetExceeded, os.str());
  }
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(m));
}

KnotSelection select_knots(const SampledFunction& f, std::int64_t M, double p) {
  require_unit_domain(f);
  check_p(p);
  require(M >= 1, ErrorCode::InvalidArgument, "select_knots: M must be >= 1");
  const auto grid = f.grid();
  const auto vals = f.values();
  const std::size_t len = grid.size();

  KnotSelection out;
  out.upsilon = pvariation_value(vals, p, M);
  out.threshold = out.upsilon / std::pow(static_cast<double>(M), 1.0 / p);
  out.knots.push_back(0.0);
  const double tau = out.threshold;
  if (tau <= 0.0) {
    out.knots.push_back(1.0);
    out.knot_case = KnotCase::CaseII;
    return out;
  }

  std::size_t seg = 0;  // current knot lies on [grid[seg], grid[seg + 1]]
  double cur_x = grid[0];
  double c = vals[0];
  std::int64_t rule_knots = 0;
  while (rule_knots < M - 1 && cur_x < 1.0) {
    bool found = false;
    for (std::size_t i = seg; i + 1 < len; ++i) {
      const double x0 = i == seg ? cur_x : grid[i];
      const double a = i == seg ? c : vals[i];
      const double b = vals[i + 1];
      if (std::abs(b - c) < tau * (1.0 - kCrossingTol)) continue;
      const double target = b > c ? c + tau : c - tau;
      double s = b == a ? 1.0 : (target - a) / (b - a);
      s = std::clamp(s, 0.0, 1.0);
      double x = s >= 1.0 ? grid[i + 1] : x0 + s * (grid[i + 1] - x0);
      if (!(x > cur_x)) x = std::nextafter(cur_x, 2.0);
      seg = i;
      cur_x = std::min(x, 1.0);
      c = s >= 1.0 ? b : a + s * (b - a);
      found = true;
      break;
    }
    if (!found) break;
    out.knots.push_back(cur_x);
    ++rule_knots;
  }
  out.knot_case = rule_knots == M - 1 && out.knots.back() < 1.0 ? KnotCase::CaseI : KnotCase::CaseII;
  if (out.knots.back() < 1.0) out.knots.push_back(1.0);
  return out;
}

PLFunction pl_interpolate(const SampledFunction& f, std::span<const double> knots) {
  require(knots.size() >= 2, ErrorCode::InvalidArgument, "pl_interpolate: need at least two knots");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    require(knots[i] >= f.front() - kTolerance && knots[i] <= f.back() + kTolerance,
            ErrorCode::InvalidArgument, "pl_interpolate: knot outside the domain of f");
    if (i > 0)
      require(knots[i] > knots[i - 1], ErrorCode::InvalidArgument,
              "pl_interpolate: knots must be strictly increasing (duplicate knot)");
  }
  std::vector<double> xs(knots.begin(), knots.end());
  std::vector<double> ys(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
  return PLFunction(std::move(xs), std::move(ys));
}

double varp_pl(const PLFunction& g, double p) {
  check_p(p);
  return full_pvariation(g.values(), p);
}

double sup_distance(const SampledFunction& f, const PLFunction& g) {
  double m = 0.0;
  for (double x : f.grid()) m = std::max(m, std::abs(f(x) - g(x)));
  for (double x : g.knots()) m = std::max(m, std::abs(f(x) - g(x)));
  return m;
}

double kfunctional_objective(const SampledFunction& f, const PLFunction& g, double t, double p) {
  return sup_distance(f, g) + t * varp_pl(g, p);
}

KSandwich kfunctional_bounds(const SampledFunction& f, double t, double p) {
  KSandwich s;
  s.t = t;
  s.M = kfunctional_M(t, p);
  const auto sel = select_knots(f, s.M, p);
  const auto g = pl_interpolate(f, sel.knots);
  s.knot_case = sel.knot_case;
  s.knot_count = sel.knots.size();
  s.upsilon = sel.upsilon;
  s.lower = t * sel.upsilon;
  s.var_g = varp_pl(g, p);
  s.sup_error = sup_distance(f, g);
  s.upper = s.sup_error + t * s.var_g;
  s.ratio = s.lower > 0.0 ? s.upper / s.lower : std::numeric_limits<double>::infinity();

  if (!approx_le(s.var_g, s.upsilon, kBoundTol)) {
    std::ostringstream os;
    os << "kfunctional: Var_p(g_M) = " << s.var_g << " exceeds upsilon_p(M, f) = " << s.upsilon;
    fail(ErrorCode::Numeric, os.str());
  }
  if (!approx_le(s.sup_error, 2.0 * sel.threshold, kBoundTol)) {
    std::ostringstream os;
    os << "kfunctional: ||f - g_M|| = " << s.sup_error << " exceeds 2 * threshold = "
       << 2.0 * sel.threshold;
    fail(ErrorCode::Numeric, os.str());
  }
  return s;
}

std::vector<KSandwich> kfunctional_sweep(const SampledFunction& f, std::span<const double> t_grid,
                                         double p, unsigned jobs) {
  return parallel_map(t_grid.size(), jobs,
                      [&](std::size_t i) { return kfunctional_bounds(f, t_grid[i], p); });
}

}  // namespace pvarlab
