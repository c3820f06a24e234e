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


#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "pvarlab/error.hpp"
#include "pvarlab/fourier.hpp"
#include "pvarlab/tolerance.hpp"
#include "support/generators.hpp"

using namespace pvarlab;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
SampledFunction periodic_sample(F f, std::size_t L, bool closing = false) {
  std::vector<double> g, v;
  const std::size_t count = closing ? L + 1 : L;
  for (std::size_t j = 0; j < count; ++j) {
    const double x = 2 * kPi * static_cast<double>(j) / static_cast<double>(L);
    g.push_back(x);
    v.push_back(f(x));
  }
  return SampledFunction::periodic(g, v, 2 * kPi);
}

// 1 on [0, pi), 0 on [pi, 2 pi), midpoint value at the jumps
double square(double x) {
  if (x == 0.0 || x == kPi) return 0.5;
  return x < kPi ? 1.0 : 0.0;
}

}  // namespace

TEST_CASE("coefficients of trigonometric polynomials") {
  auto c = fourier_coeffs(periodic_sample([](double x) { return std::cos(x); }, 64), 3);
  CHECK(c.a0 == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(c.a[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(c.b[k]) < 1e-14);
  CHECK(std::abs(c.a[1]) < 1e-14);
  auto s = fourier_coeffs(periodic_sample([](double x) { return std::sin(2 * x); }, 33, true), 5);
  for (int k = 1; k <= 5; ++k) {
    CHECK(std::abs(s.a[k - 1]) < 1e-14);
    CHECK(s.b[k - 1] == doctest::Approx(k == 2 ? 1.0 : 0.0).epsilon(1e-14));
  }
  CHECK_THROWS_AS(fourier_coeffs(periodic_sample([](double) { return 0.0; }, 8), 4), Error);
  CHECK(fourier_coeffs(periodic_sample([](double) { return 0.0; }, 9), 4).N() == 4);
  CHECK_THROWS_AS(fourier_coeffs(SampledFunction::uniform(0, 1, {0, 1, 0}), 1), Error);
  // nonuniform periodic grid
  CHECK_THROWS_AS(fourier_coeffs(SampledFunction::periodic({0, 1, 3}, {0, 1, 0}, 2 * kPi), 1), Error);
}

TEST_CASE("square wave") {
  auto f = periodic_sample(square, 4096);
  auto c = fourier_coeffs(f, 16);
  CHECK(c.a0 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.b[0] == doctest::Approx(2 / kPi).epsilon(1e-6));
  CHECK(std::abs(c.b[1]) < 1e-12);
  for (int k = 1; k <= 16; k += 2)
    CHECK(c.b[k - 1] == doctest::Approx(2 / (kPi * k)).epsilon(1e-5));
  std::vector<double> x{kPi / 2};
  const double s9 = partial_sum(c, 9, x)[0];
  const double exact = 0.5 + 2 / kPi * (1 - 1.0 / 3 + 1.0 / 5 - 1.0 / 7 + 1.0 / 9);
  CHECK(s9 == doctest::Approx(exact).epsilon(1e-5));
  CHECK(exact == doctest::Approx(1.03152698454817).epsilon(1e-13));
  auto s0 = partial_sum(c, 0, x);
  CHECK(s0[0] == doctest::Approx(0.5));
}

TEST_CASE("partial sums and Fejer means") {
  auto c = fourier_coeffs(periodic_sample([](double x) { return std::cos(x); }, 32), 4);
  auto g = linspace(0, 2 * kPi, 20);
  auto s = partial_sum(c, 3, g);
  auto m = fejer_mean(c, 2, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(s[i] == doctest::Approx(std::cos(g[i])).epsilon(1e-13));
    CHECK(m[i] == doctest::Approx(2.0 / 3.0 * std::cos(g[i])).epsilon(1e-13));
  }
  auto k = fourier_coeffs(periodic_sample([](double) { return 1.75; }, 16), 5);
  for (int n = 0; n <= 5; ++n)
    for (double v : fejer_mean(k, n, g)) CHECK(v == doctest::Approx(1.75).epsilon(1e-14));
  CHECK_THROWS_AS(partial_sum(k, 6, g), Error);
  // F_n is the average of S_0..S_n
  gen::Rng rng(8);
  auto r = periodic_sample([&](double x) { return std::sin(3 * x) + 0.3 * std::cos(x) + rng.uniform(-0.1, 0.1); }, 64);
  auto cr = fourier_coeffs(r, 20);
  for (int n : {0, 1, 5, 20}) {
    auto fm = fejer_mean(cr, n, g);
    std::vector<double> avg(g.size(), 0.0);
    for (int j = 0; j <= n; ++j) {
      auto sj = partial_sum(cr, j, g);
      for (std::size_t i = 0; i < g.size(); ++i) avg[i] += sj[i] / (n + 1);
    }
    for (std::size_t i = 0; i < g.size(); ++i) CHECK(fm[i] == doctest::Approx(avg[i]).epsilon(1e-12));
  }
}

TEST_CASE("parseval for band-limited samples") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> a(6), b(6);
    for (int k = 0; k < 6; ++k) {
      a[k] = rng.uniform(-1, 1);
      b[k] = rng.uniform(-1, 1);
    }
    const double a0 = rng.uniform(-1, 1);
    auto f = periodic_sample(
        [&](double x) {
          double s = a0 / 2;
          for (int k = 1; k <= 6; ++k) s += a[k - 1] * std::cos(k * x) + b[k - 1] * std::sin(k * x);
          return s;
        },
        40);
    auto c = fourier_coeffs(f, 19);
    double grid_energy = 0;
    for (double v : f.values()) grid_energy += v * v;
    grid_energy /= 40;
    double coeff_energy = c.a0 * c.a0 / 4;
    for (int k = 1; k <= 19; ++k) coeff_energy += 0.5 * (c.a[k - 1] * c.a[k - 1] + c.b[k - 1] * c.b[k - 1]);
    CHECK(coeff_energy == doctest::Approx(grid_energy).epsilon(1e-6));
  }
}

TEST_CASE("Fejer kernel integrates to pi") {
  CHECK(fejer_kernel(0, 1.234) == doctest::Approx(0.5));
  CHECK(fejer_kernel(3, 0.0) == doctest::Approx(2.0));
  for (int n = 0; n <= 50; ++n) CHECK(std::abs(fejer_kernel_integral(n) - kPi) <= 1e-8);
  for (double t : {-3.0, -0.5, 0.2, 2.9}) CHECK(fejer_kernel(7, t) >= 0.0);
}

TEST_CASE("modulus of continuity") {
  auto s = periodic_sample([](double x) { return std::sin(x); }, 64);
  CHECK(modulus_of_continuity(s, kPi) == doctest::Approx(2.0));
  CHECK(modulus_of_continuity(s, 0.0) == 0.0);
  auto c = periodic_sample([](double) { return 3.0; }, 10);
  for (double d : {0.0, 0.1, 1.0, 10.0}) CHECK(modulus_of_continuity(c, d) == 0.0);
  // sawtooth x on [0, 1): the wrap jump shows up for any delta >= one step
  auto g = linspace(0.0, 1.0, 41);
  g.pop_back();
  auto saw = SampledFunction::periodic(g, g, 1.0);
  CHECK(modulus_of_continuity(saw, 0.25) >= 0.25);
  auto line = SampledFunction(linspace(0.0, 1.0, 41), linspace(0.0, 1.0, 41));
  CHECK(modulus_of_continuity(line, 0.25) == doctest::Approx(0.25));
  // brute force over pairs
  gen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto v = rng.values(static_cast<std::size_t>(rng.integer(2, 30)));
    std::vector<double> grid;
    for (std::size_t i = 0; i < v.size(); ++i) grid.push_back(2 * kPi * i / v.size());
    auto f = SampledFunction::periodic(grid, v, 2 * kPi);
    const double d = rng.uniform(0, 7);
    double best = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) {
        double h = grid[j] - grid[i];
        if (h < 0) h += 2 * kPi;
        if (i != j && h <= d * (1 + 1e-9) + 1e-9) best = std::max(best, std::abs(v[j] - v[i]));
      }
    CHECK(modulus_of_continuity(f, d) == doctest::Approx(best));
  }
}

TEST_CASE("omega families") {
  auto w = ModulusOfContinuity::power(0.5);
  CHECK(w(0.25) == doctest::Approx(0.5));
  CHECK(w(0.0) == 0.0);
  auto l = ModulusOfContinuity::inverse_log(2.0);
  CHECK(l(1.0) == doctest::Approx(2.0 / std::log(std::numbers::e + 1.0)));
  CHECK_THROWS_AS(ModulusOfContinuity::power(1.5), Error);
  auto s = ModulusOfContinuity::sampled(periodic_sample([](double x) { return std::sin(x); }, 64));
  CHECK(s(kPi) == doctest::Approx(2.0));
}

TEST_CASE("theta") {
  auto nu = ModulusOfVariation::power(0.25);
  auto w = ModulusOfContinuity::power(0.5);
  CHECK(theta(nu, w, 2.0, 2) == 1);
  // exhaustive scan at n = 16
  const std::int64_t n = 16;
  double best = 1e300;
  std::int64_t arg = 0;
  for (std::int64_t r = 1; r <= n - 1; ++r) {
    double v = 0;
    for (std::int64_t k = 1; k <= r; ++k) v += w(1.0 / n) / k;
    for (std::int64_t k = r + 1; k <= n - 1; ++k) v += nu(k) / std::pow(k, 1.5);
    if (v < best - 1e-14) {
      best = v;
      arg = r;
    }
  }
  const auto th = theta(nu, w, 2.0, n);
  CHECK(th == arg);
  if (th < n - 1) {
    CHECK(nu(th + 1) / std::sqrt(th + 1.0) <= w(1.0 / n) * (1 + 1e-12));
    CHECK(w(1.0 / n) <= nu(th) / std::sqrt(double(th)) * (1 + 1e-12));
  }
  // huge omega pushes theta towards 1... until the tail is exhausted
  auto big = ModulusOfContinuity::power(1.0, 1e6);
  CHECK(theta(ModulusOfVariation::log(), big, 1.0, 40) == 1);
}

TEST_CASE("convergence sequences") {
  auto nu = ModulusOfVariation::power(0.125);
  auto w = ModulusOfContinuity::power(1.0 / 3.0);
  auto s2 = convergence_sequences(nu, w, 2.0, 2);
  CHECK(s2.rho == doctest::Approx(w(0.5)));
  CHECK(s2.sigma == s2.rho);
  CHECK(s2.tau == s2.rho);
  CHECK(s2.eta == s2.rho);
  double prev[4] = {1e9, 1e9, 1e9, 1e9};
  for (std::int64_t n : {8, 64, 512, 4096}) {
    auto s = convergence_sequences(nu, w, 2.0, n);
    const double cur[4] = {s.rho, s.sigma, s.tau, s.eta};
    for (int i = 0; i < 4; ++i) {
      CHECK(cur[i] >= 0.0);
      CHECK(cur[i] < prev[i]);
      prev[i] = cur[i];
    }
    const double rhs = nu(n - 1) / std::pow(double(n), 0.5) - nu(s.theta) / std::pow(s.theta + 1.0, 0.5);
    CHECK(std::abs((s.tau - s.eta) - rhs) <= 1e-10);
    CHECK(std::abs(s.tail_q - (s.tail_nu - s.tail_delta)) <= 1e-12 * (1 + s.tail_nu));
  }
}

TEST_CASE("Lemma Q quick range") {
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    double prev = 1.0;
    for (std::int64_t k = 1; k <= 20000; ++k) {
      const double q = lemma_q(k, p);
      CHECK_FALSE(q < 1 - 1 / p - 1e-15);
      CHECK_FALSE(q > std::pow(2.0, -1 / p) + 1e-15);
      CHECK_FALSE(q > prev + 1e-15);
      prev = q;
    }
  }
  CHECK(lemma_q(1, 2.0) == doctest::Approx(std::pow(2.0, -0.5)));
  CHECK(lemma_q(9, 1.0) == doctest::Approx(0.1));
}

TEST_CASE("unif2 verdicts") {
  auto conv = unif2_verdicts(ModulusOfVariation::power(0.25), 2.0, 1 << 14);
  CHECK(conv.agree);
  for (const auto& s : conv.series) CHECK(s.verdict == SeriesVerdict::Converges);
  auto div = unif2_verdicts(ModulusOfVariation::power(0.5), 2.0, 1 << 14);
  CHECK(div.agree);
  for (const auto& s : div.series) CHECK(s.verdict == SeriesVerdict::Diverges);
  auto lg = unif2_verdicts(ModulusOfVariation::log(), 1.0, 10000);
  CHECK(lg.agree);
  // golden value from a 30-digit independent summation
  CHECK(lg.series[0].partial == doctest::Approx(1.79973406301900).epsilon(1e-13));
  // slow convergence: exponent -1.375 still converges
  auto slow = unif2_verdicts(ModulusOfVariation::power(0.125), 2.0, 100000);
  CHECK(slow.agree);
  CHECK(slow.series[0].verdict == SeriesVerdict::Converges);
  CHECK_THROWS_AS(unif2_verdicts(ModulusOfVariation::log(), 1.0, 8), Error);
}

TEST_CASE("coefficient decay") {
  auto sq = periodic_sample(square, 1024);
  auto r = coeff_decay_report(sq, ModulusOfVariation::log(), 1.0, 64);
  CHECK(std::isfinite(r.sup));
  CHECK(r.sup < 1.0);
  auto c = coeff_decay_report(periodic_sample([](double x) { return std::cos(x); }, 64),
                              ModulusOfVariation::log(), 1.0, 8);
  CHECK(c.sup == doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-12));
  CHECK(c.ratios[0] == c.sup);
  auto k = coeff_decay_report(periodic_sample([](double) { return 2.0; }, 64), ModulusOfVariation::log(), 1.0, 8);
  CHECK(k.sup < 1e-14);
}

TEST_CASE("sine integral lemma") {
  auto [l1, r1] = sine_integral_lower(1, 2, 4);
  CHECK(r1 == doctest::Approx(0.125));
  CHECK(l1 >= r1);
  auto [l2, r2] = sine_integral_lower(2, 3, 6);
  CHECK(l2 >= r2);
  auto [l3, r3] = sine_integral_lower(1, 100, 200);
  CHECK(l3 >= r3);
  CHECK_THROWS_AS(sine_integral_lower(3, 3, 1), Error);
}

TEST_CASE("nikolskii check") {
  auto nu = ModulusOfVariation::log();
  auto cosf = periodic_sample([](double x) { return std::cos(x); }, 64);
  auto w = ModulusOfContinuity::sampled(cosf);
  auto a = nikolskii_bound_check(cosf, nu, w, 1.0, 4);
  CHECK(a.error < 1e-13);
  auto sq = periodic_sample(square, 1024);
  auto ws = ModulusOfContinuity::sampled(sq);
  for (int n : {8, 16, 32, 64}) {
    auto r = nikolskii_bound_check(sq, nu, ws, 1.0, n);
    CHECK(r.bound > 0);
    CHECK(r.error / r.bound < 10.0);
  }
  auto k = periodic_sample([](double) { return 1.0; }, 32);
  auto kc = nikolskii_bound_check(k, nu, ModulusOfContinuity::sampled(k), 1.0, 4);
  CHECK(kc.error < 1e-14);
  CHECK(kc.bound > 0);
}
