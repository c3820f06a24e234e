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


#include "pvarlab/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

#include "pvarlab/error.hpp"
#include "pvarlab/quadrature.hpp"
#include "pvarlab/seqspaces.hpp"
#include "pvarlab/tolerance.hpp"
#include "pvarlab/variation.hpp"

namespace pvarlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGridTol = 1e-9;

void check_p(double p) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument,
          "fourier: p must be a finite real >= 1");
}

// Samples covering one period, without a closing duplicate.
std::size_t distinct_count(const SampledFunction& f) {
  const double per = *f.period();
  const std::size_t len = f.size();
  if (std::abs(f.back() - f.front() - per) <= kGridTol * per) return len - 1;
  return len;
}

double inv_root(double k, double p) { return p == 1.0 ? 1.0 / k : std::pow(k, -1.0 / p); }

}  // namespace

double FourierCoeffs::magnitude(int k) const {
  require(k >= 1 && k <= N(), ErrorCode::InvalidArgument, "fourier: harmonic out of range");
  return std::hypot(a[static_cast<std::size_t>(k - 1)], b[static_cast<std::size_t>(k - 1)]);
}

FourierCoeffs fourier_coeffs(const SampledFunction& f, int N) {
  require(f.is_periodic(), ErrorCode::InvalidArgument, "fourier_coeffs: f must be periodic");
  require(N >= 0, ErrorCode::InvalidArgument, "fourier_coeffs: N must be >= 0");
  const double per = *f.period();
  const std::size_t L = distinct_count(f);
  const double h = per / static_cast<double>(L);
  const auto grid = f.grid();
  const auto vals = f.values();
  for (std::size_t j = 0; j < L; ++j)
    require(std::abs(grid[j] - (grid[0] + h * static_cast<double>(j))) <= kGridTol * per,
            ErrorCode::InvalidArgument,
            "fourier_coeffs: grid must be uniform over exactly one period");
  if (2 * static_cast<std::size_t>(N) >= L) {
    std::ostringstream os;
    os << "fourier_coeffs: aliasing limit, need N < L/2 (N=" << N << ", L=" << L << ")";
    fail(ErrorCode::Domain, os.str());
  }
  const double w = 2.0 * kPi / per;
  FourierCoeffs c;
  c.period = per;
  c.a.assign(static_cast<std::size_t>(N), 0.0);
  c.b.assign(static_cast<std::size_t>(N), 0.0);
  CompensatedSum s0;
  for (std::size_t j = 0; j < L; ++j) s0.add(vals[j]);
  c.a0 = 2.0 * s0.value() / static_cast<double>(L);
  for (int k = 1; k <= N; ++k) {
    CompensatedSum sa, sb;
    for (std::size_t j = 0; j < L; ++j) {
      const double arg = w * k * grid[j];
      sa.add(vals[j] * std::cos(arg));
      sb.add(vals[j] * std::sin(arg));
    }
    c.a[static_cast<std::size_t>(k - 1)] = 2.0 * sa.value() / static_cast<double>(L);
    c.b[static_cast<std::size_t>(k - 1)] = 2.0 * sb.value() / static_cast<double>(L);
  }
  return c;
}

namespace {

std::vector<double> weighted_sum(const FourierCoeffs& c, int n, std::span<const double> x,
                                 bool cesaro) {
  require(n >= 0 && n <= c.N(), ErrorCode::InvalidArgument,
          "fourier: order exceeds the available coefficients");
  const double w = 2.0 * kPi / c.period;
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CompensatedSum s;
    s.add(0.5 * c.a0);
    for (int k = 1; k <= n; ++k) {
      const double weight = cesaro ? 1.0 - static_cast<double>(k) / (n + 1) : 1.0;
      const double arg = w * k * x[i];
      const auto kk = static_cast<std::size_t>(k - 1);
      s.add(weight * (c.a[kk] * std::cos(arg) + c.b[kk] * std::sin(arg)));
    }
    out[i] = s.value();
  }
  return out;
}

}  // namespace

std::vector<double> partial_sum(const FourierCoeffs& c, int n, std::span<const double> x) {
  return weighted_sum(c, n, x, false);
}

std::vector<double> fejer_mean(const FourierCoeffs& c, int n, std::span<const double> x) {
  return weighted_sum(c, n, x, true);
}

double fejer_kernel(int n, double t) {
  require(n >= 0, ErrorCode::InvalidArgument, "fejer_kernel: n must be >= 0");
  const double m = n + 1.0;
  const double s = std::sin(0.5 * t);
  if (std::abs(s) < 1e-8) return 0.5 * m;  // limit value, error O(t^2 m^3)
  const double r = std::sin(0.5 * m * t) / s;
  return r * r / (2.0 * m);
}

double fejer_kernel_integral(int n) {
  require(n >= 0, ErrorCode::InvalidArgument, "fejer_kernel_integral: n must be >= 0");
  auto k = [n](double t) { return fejer_kernel(n, t); };
  const auto r = adaptive_simpson(k, -kPi, kPi, 1e-10, 4 * (n + 1));
  require(r.converged, ErrorCode::Numeric, "fejer_kernel_integral: quadrature did not converge");
  return r.value;
}

ModulusOfContinuity::ModulusOfContinuity(Kind kind, double alpha, double scale,
                                         std::optional<SampledFunction> f)
    : kind_(kind), alpha_(alpha), scale_(scale), f_(std::move(f)) {}

ModulusOfContinuity ModulusOfContinuity::power(double alpha, double scale) {
  require(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0, ErrorCode::InvalidArgument,
          "omega: power exponent must lie in (0, 1]");
  require(std::isfinite(scale) && scale > 0.0, ErrorCode::InvalidArgument,
          "omega: scale must be positive");
  return ModulusOfContinuity(Kind::Power, alpha, scale, std::nullopt);
}

ModulusOfContinuity ModulusOfContinuity::inverse_log(double scale) {
  require(std::isfinite(scale) && scale > 0.0, ErrorCode::InvalidArgument,
          "omega: scale must be positive");
  return ModulusOfContinuity(Kind::InverseLog, 1.0, scale, std::nullopt);
}

ModulusOfContinuity ModulusOfContinuity::sampled(SampledFunction f) {
  return ModulusOfContinuity(Kind::Sampled, 1.0, 1.0, std::move(f));
}

double ModulusOfContinuity::operator()(double delta) const {
  require(delta >= 0.0, ErrorCode::InvalidArgument, "omega: delta must be >= 0");
  if (delta == 0.0) return 0.0;
  switch (kind_) {
    case Kind::Power: return scale_ * std::pow(delta, alpha_);
    case Kind::InverseLog: return scale_ / std::log(std::numbers::e + 1.0 / delta);
    case Kind::Sampled: return modulus_of_continuity(*f_, delta);
  }
  return 0.0;
}

std::string ModulusOfContinuity::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Power: os << "power:" << alpha_ << ":" << scale_; break;
    case Kind::InverseLog: os << "invlog:" << scale_; break;
    case Kind::Sampled: os << "sampled[" << f_->size() << "]"; break;
  }
  return os.str();
}

double modulus_of_continuity(const SampledFunction& f, double delta) {
  require(delta >= 0.0, ErrorCode::InvalidArgument, "modulus_of_continuity: delta must be >= 0");
  std::vector<double> xs(f.grid().begin(), f.grid().end());
  std::vector<double> ys(f.values().begin(), f.values().end());
  std::size_t base = xs.size();
  if (f.is_periodic()) {
    base = distinct_count(f);
    xs.resize(base);
    ys.resize(base);
    const double per = *f.period();
    for (std::size_t j = 0; j < base; ++j) {
      xs.push_back(xs[j] + per);
      ys.push_back(ys[j]);
    }
  }
  const double reach = delta * (1.0 + kGridTol) + kGridTol;
  // sliding max/min over the window (i, r(i)]
  std::deque<std::size_t> hi, lo;
  std::size_t r = 0;
  double best = 0.0;
  for (std::size_t i = 0; i < base; ++i) {
    while (r + 1 < xs.size() && xs[r + 1] - xs[i] <= reach) {
      ++r;
      while (!hi.empty() && ys[hi.back()] <= ys[r]) hi.pop_back();
      hi.push_back(r);
      while (!lo.empty() && ys[lo.back()] >= ys[r]) lo.pop_back();
      lo.push_back(r);
    }
    while (!hi.empty() && hi.front() <= i) hi.pop_front();
    while (!lo.empty() && lo.front() <= i) lo.pop_front();
    if (!hi.empty()) best = std::max(best, ys[hi.front()] - ys[i]);
    if (!lo.empty()) best = std::max(best, ys[i] - ys[lo.front()]);
  }
  return best;
}

std::int64_t theta(const ModulusOfVariation& nu, const ModulusOfContinuity& omega, double p,
                   std::int64_t n) {
  check_p(p);
  require(n >= 2, ErrorCode::InvalidArgument, "theta: n must be >= 2");
  const double w = omega(1.0 / static_cast<double>(n));
  // objective(r+1) - objective(r) = w/(r+1) - nu(r+1)/(r+1)^{1+1/p}
  double cur = 0.0;
  double best = 0.0;
  double scale = 0.0;
  std::int64_t arg = 1;
  for (std::int64_t r = 1; r + 1 <= n - 1; ++r) {
    const auto k = static_cast<double>(r + 1);
    const double gain = w / k;
    const double loss = nu(r + 1) * inv_root(k, p) / k;
    cur += gain - loss;
    scale = std::max(scale, gain + loss);
    if (cur < best - 1e-13 * std::max(scale, std::abs(best))) {
      best = cur;
      arg = r + 1;
    }
  }
  return arg;
}

double lemma_q(std::int64_t k, double p) {
  require(k >= 1, ErrorCode::InvalidArgument, "lemma_q: k must be >= 1");
  check_p(p);
  const auto kk = static_cast<double>(k);
  return 1.0 + kk * std::expm1(-std::log1p(1.0 / kk) / p);
}

double delta_inverse_root(std::int64_t k, double p) {
  require(k >= 1, ErrorCode::InvalidArgument, "delta_inverse_root: k must be >= 1");
  const auto kk = static_cast<double>(k);
  return -inv_root(kk, p) * std::expm1(-std::log1p(1.0 / kk) / p);
}

ConvergenceSequences convergence_sequences(const ModulusOfVariation& nu,
                                           const ModulusOfContinuity& omega, double p,
                                           std::int64_t n) {
  ConvergenceSequences s;
  s.n = n;
  s.theta = theta(nu, omega, p, n);
  s.omega_n = omega(1.0 / static_cast<double>(n));
  CompensatedSum harmonic;
  for (std::int64_t k = 1; k <= s.theta; ++k) harmonic.add(1.0 / static_cast<double>(k));
  s.head = s.omega_n * harmonic.value();
  CompensatedSum t_nu, t_eps, t_diff, t_delta, t_q;
  for (std::int64_t k = s.theta + 1; k <= n - 1; ++k) {
    const auto kk = static_cast<double>(k);
    const double v = nu(k);
    const double base = v * inv_root(kk, p) / kk;
    t_nu.add(base);
    t_eps.add(epsilon_p(nu, p, k) / kk);
    t_diff.add(nu.power_increment(k, 1.0) * inv_root(kk, p));
    t_delta.add(delta_inverse_root(k, p) * v);
    t_q.add(base * lemma_q(k, p));
  }
  s.tail_nu = t_nu.value();
  s.tail_eps = t_eps.value();
  s.tail_diff = t_diff.value();
  s.tail_delta = t_delta.value();
  s.tail_q = t_q.value();
  s.rho = s.head + s.tail_nu;
  s.sigma = s.head + s.tail_eps;
  s.tau = s.head + s.tail_diff;
  s.eta = s.head + s.tail_delta;
  return s;
}

const char* to_string(SeriesVerdict v) noexcept {
  switch (v) {
    case SeriesVerdict::Converges: return "converges";
    case SeriesVerdict::Diverges: return "diverges";
    case SeriesVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Unif2Report unif2_verdicts(const ModulusOfVariation& nu, double p, std::int64_t horizon) {
  check_p(p);
  require(horizon >= 16, ErrorCode::InvalidArgument, "unif2_verdicts: horizon must be >= 16");
  nu.require_index(horizon);
  const std::int64_t quarter = horizon / 4;
  const std::int64_t half = horizon / 2;

  static const char* const kNames[] = {"nu_over_k", "delta_root_nu", "eps1_over_root",
                                       "epsp_over_k", "dual_lower"};
  CompensatedSum sums[4];
  double at_quarter[5] = {}, at_half[5] = {}, at_h[5] = {};
  std::vector<double> eps;
  eps.reserve(static_cast<std::size_t>(horizon));
  for (std::int64_t k = 1; k <= horizon; ++k) {
    const auto kk = static_cast<double>(k);
    const double v = nu(k);
    const double e = epsilon_p(nu, p, k);
    eps.push_back(e);
    sums[0].add(v * inv_root(kk, p) / kk);
    sums[1].add(delta_inverse_root(k, p) * v);
    sums[2].add(nu.power_increment(k, 1.0) * inv_root(kk, p));
    sums[3].add(e / kk);
    if (k == quarter || k == half || k == horizon) {
      double* row = k == quarter ? at_quarter : (k == half ? at_half : at_h);
      for (int i = 0; i < 4; ++i) row[i] = sums[i].value();
      // dual lower form: the test vector {eps_p(j)}_{j<=k} normalised in m(nu, p)
      const double norm = marcinkiewicz_norm(std::span<const double>(eps), nu, p);
      row[4] = norm > 0.0 ? row[3] / norm : 0.0;
    }
  }

  std::optional<SeriesVerdict> closed;
  switch (nu.kind()) {
    case ModulusOfVariation::Kind::Power:
      closed = nu.alpha() < 1.0 / p ? SeriesVerdict::Converges : SeriesVerdict::Diverges;
      break;
    case ModulusOfVariation::Kind::Log: closed = SeriesVerdict::Converges; break;
    case ModulusOfVariation::Kind::Table: break;
  }

  Unif2Report rep;
  rep.horizon = horizon;
  for (int i = 0; i < 5; ++i) {
    SeriesReport s;
    s.name = kNames[i];
    s.partial_quarter = at_quarter[i];
    s.partial_half = at_half[i];
    s.partial = at_h[i];
    const double d1 = s.partial_half - s.partial_quarter;
    const double d2 = s.partial - s.partial_half;
    const bool small = d2 < std::max(1e-6, 1e-3 * std::abs(s.partial));
    const bool shrinking = d1 > 0.0 && d2 / d1 < 0.95;
    s.numeric = small || shrinking ? SeriesVerdict::Converges : SeriesVerdict::Diverges;
    s.closed_form = closed;
    if (!closed)
      s.verdict = s.numeric;
    else
      s.verdict = *closed == s.numeric ? s.numeric : SeriesVerdict::Inconclusive;
    rep.series.push_back(s);
  }
  rep.agree = std::all_of(rep.series.begin(), rep.series.end(), [&](const SeriesReport& s) {
    return s.verdict == rep.series.front().verdict && s.verdict != SeriesVerdict::Inconclusive;
  });
  return rep;
}

CoeffDecayReport coeff_decay_report(const SampledFunction& f, const ModulusOfVariation& nu,
                                    double p, int N) {
  check_p(p);
  require(N >= 1, ErrorCode::InvalidArgument, "coeff_decay_report: N must be >= 1");
  const auto c = fourier_coeffs(f, N);
  CoeffDecayReport r;
  for (int k = 1; k <= N; ++k) {
    const double ratio = c.magnitude(k) / (inv_root(k, p) * nu(k));
    r.ratios.push_back(ratio);
    r.sup = std::max(r.sup, ratio);
  }
  return r;
}

std::pair<double, double> sine_integral_lower(std::int64_t a, std::int64_t b, std::int64_t n) {
  require(a >= 1 && n >= 1, ErrorCode::InvalidArgument,
          "sine_integral_lower: a, b, n must be positive");
  require(a < b, ErrorCode::InvalidArgument, "sine_integral_lower: need a < b");
  // substitute u = n t: the integral is over [a pi, b pi] of sin^2(u)/u
  auto g = [](double u) {
    const double s = std::sin(u);
    return s * s / u;
  };
  const auto q = adaptive_simpson(g, kPi * static_cast<double>(a), kPi * static_cast<double>(b),
                                  1e-10, static_cast<int>(std::min<std::int64_t>(2 * (b - a), 1 << 20)));
  require(q.converged, ErrorCode::Numeric, "sine_integral_lower: quadrature did not converge");
  CompensatedSum h;
  for (std::int64_t i = a; i <= b; ++i) h.add(1.0 / static_cast<double>(i));
  return {q.value, h.value() / 12.0};
}

NikolskiiCheck nikolskii_bound_check(const SampledFunction& f, const ModulusOfVariation& nu,
                                     const ModulusOfContinuity& omega, double p, int n) {
  require(n >= 2, ErrorCode::InvalidArgument, "nikolskii_bound_check: n must be >= 2");
  const auto c = fourier_coeffs(f, n);
  const auto s = partial_sum(c, n, f.grid());
  NikolskiiCheck out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out.error = std::max(out.error, std::abs(f.values()[i] - s[i]));
  const auto seq = convergence_sequences(nu, omega, p, n);
  out.bound = seq.sigma + nu(n) * inv_root(n, p);
  return out;
}

FejerContraction fejer_contraction(const SampledFunction& f, const ModulusOfVariation& nu,
                                   double p, int n, std::int64_t n_max) {
  const auto c = fourier_coeffs(f, n);
  auto mean = fejer_mean(c, n, f.grid());
  const SampledFunction fm = SampledFunction::periodic(
      std::vector<double>(f.grid().begin(), f.grid().end()), std::move(mean), *f.period());
  FejerContraction out;
  out.original = vpnu_norm(f, nu, p, n_max).variation;
  out.mean = vpnu_norm(fm, nu, p, n_max).variation;
  return out;
}

}  // namespace pvarlab
