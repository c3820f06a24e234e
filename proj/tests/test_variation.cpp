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
#include <vector>

#include "pvarlab/error.hpp"
#include "pvarlab/tolerance.hpp"
#include "pvarlab/variation.hpp"
#include "support/generators.hpp"

using namespace pvarlab;

namespace {

SampledFunction on_unit(std::vector<double> v) { return SampledFunction::uniform(0.0, 1.0, std::move(v)); }

const std::vector<double> kZigzag{0, 1, 0, 1, 0};

}  // namespace

TEST_CASE("brute force examples") {
  auto r = pvariation_bruteforce(on_unit({0, 0.5, 1.0}), 2.0, 2);
  CHECK(r.value == doctest::Approx(1.0));
  REQUIRE(r.selection.intervals.size() == 1);
  CHECK(r.selection.intervals[0].start == 0);
  CHECK(r.selection.intervals[0].end == 2);
  CHECK(pvariation_bruteforce(on_unit(kZigzag), 2.0, 2).value == doctest::Approx(std::sqrt(2.0)));
  CHECK(pvariation_bruteforce(on_unit(kZigzag), 1.0, 4).value == doctest::Approx(4.0));
}

TEST_CASE("brute force budget") {
  CHECK_THROWS_AS(pvariation_bruteforce(on_unit(std::vector<double>(16, 0.0)), 1.0, 1), Error);
  CHECK_THROWS_AS(pvariation_bruteforce(on_unit(kZigzag), 1.0, 7), Error);
  try {
    pvariation_bruteforce(on_unit(kZigzag), 1.0, 7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BudgetExceeded);
  }
}

TEST_CASE("dp examples") {
  CHECK(pvariation_dp(on_unit({0, 0.5, 1.0}), 2.0, 2).value == doctest::Approx(1.0));
  auto r = pvariation_dp(on_unit(kZigzag), 2.0, 3);
  CHECK(r.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.selection.nonoverlapping());
  CHECK(r.selection.objective() == doctest::Approx(r.value).epsilon(1e-12));
  // lexicographically smallest optimal selection: [0,1], [1,2], [2,3]
  REQUIRE(r.selection.intervals.size() == 3);
  CHECK(r.selection.intervals[0].start == 0);
  CHECK(r.selection.intervals[0].end == 1);
  CHECK(r.selection.intervals[2].start == 2);
  CHECK(r.selection.intervals[2].end == 3);

  gen::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto v = rng.values(static_cast<std::size_t>(rng.integer(2, 30)));
    double best = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = i + 1; j < v.size(); ++j) best = std::max(best, std::abs(v[j] - v[i]));
    CHECK(pvariation_dp(on_unit(v), 1.7, 1).value == doctest::Approx(best).epsilon(1e-13));
  }
}

TEST_CASE("dp agrees with brute force") {
  gen::Rng rng(20260101);
  for (int trial = 0; trial < 300; ++trial) {
    auto f = rng.function(static_cast<std::size_t>(rng.integer(2, 11)));
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      for (int n = 1; n <= 4; ++n) {
        auto dp = pvariation_dp(f, p, n);
        auto bf = pvariation_bruteforce(f, p, n);
        CHECK(std::abs(dp.value - bf.value) <= 1e-12 * (1 + bf.value));
        CHECK(dp.selection.nonoverlapping());
        CHECK(dp.selection.intervals.size() <= static_cast<std::size_t>(n));
        CHECK(approx_eq(dp.selection.objective(), dp.value));
      }
    }
  }
}

TEST_CASE("extrema reduction") {
  auto idx = extrema_indices(std::vector<double>{0, 0.5, 1.0});
  CHECK(idx == std::vector<std::size_t>{0, 2});
  CHECK(extrema_indices(kZigzag) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  auto g = extrema_reduce(on_unit({0, 0.3, 1, 0.7, 0.2, 0.9}));
  CHECK(std::vector<double>(g.values().begin(), g.values().end()) ==
        std::vector<double>{0, 1, 0.2, 0.9});
  CHECK(g.grid()[1] == doctest::Approx(0.4));
  CHECK(extrema_indices(std::vector<double>{2, 2, 2}) == std::vector<std::size_t>{0, 2});
  CHECK(extrema_indices(std::vector<double>{0, 1, 1, 0}) == std::vector<std::size_t>{0, 1, 3});

  gen::Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = rng.function(static_cast<std::size_t>(rng.integer(2, 13)));
    auto g = extrema_reduce(f);
    for (int n = 1; n <= 5; ++n)
      CHECK(approx_eq(pvariation_dp(g, 2.0, n).value, pvariation_dp(f, 2.0, n).value));
  }
}

TEST_CASE("profile") {
  auto prof = pvariation_profile(on_unit(kZigzag), 1.0, 7);
  CHECK(prof == std::vector<double>{1, 2, 3, 4, 4, 4, 4});
  auto mono = pvariation_profile(on_unit({0, 0.2, 0.5, 1.5}), 3.0, 5);
  for (double x : mono) CHECK(x == doctest::Approx(1.5));

  gen::Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto f = rng.function(static_cast<std::size_t>(rng.integer(2, 40)));
    const double p = rng.uniform(1.0, 4.0);
    auto pr = pvariation_profile(f, p, 20);
    for (std::size_t n = 1; n <= pr.size(); ++n) {
      CHECK(approx_eq(pr[n - 1], pvariation_dp(f, p, static_cast<int>(n)).value));
      if (n > 1) CHECK(pr[n - 2] <= pr[n - 1]);
      CHECK(approx_le(pr[n - 1], pr[0] * std::pow(static_cast<double>(n), 1.0 / p)));
    }
  }
}

TEST_CASE("hoelder chain, triangle, homogeneity") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto len = static_cast<std::size_t>(rng.integer(2, 25));
    auto f = rng.function(len);
    auto g = rng.function(len);
    const double c = rng.uniform(-3.0, 3.0);
    for (double p : {1.5, 2.0, 3.0}) {
      for (int n = 1; n <= 6; ++n) {
        const double vp = pvariation_dp(f, p, n).value;
        const double v1 = pvariation_dp(f, 1.0, n).value;
        CHECK(approx_le(vp, v1));
        CHECK(approx_le(v1, vp * std::pow(n, 1.0 - 1.0 / p)));
        CHECK(approx_le(pvariation_dp(f.plus(g), p, n).value, vp + pvariation_dp(g, p, n).value));
        CHECK(approx_eq(pvariation_dp(f.scaled(c), p, n).value, std::abs(c) * vp));
      }
    }
  }
}

TEST_CASE("vpnu norm") {
  auto r = vpnu_norm(on_unit(kZigzag), ModulusOfVariation::power(0.5), 2.0, 8);
  CHECK(r.variation == doctest::Approx(1.0));
  CHECK(r.sup == doctest::Approx(1.0));
  CHECK(r.norm() == doctest::Approx(2.0));
  auto c = vpnu_norm(on_unit({-1.5, -1.5, -1.5}), ModulusOfVariation::log(), 1.0, 10);
  CHECK(c.variation == 0.0);
  CHECK(c.sup == 1.5);
  gen::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = rng.function(static_cast<std::size_t>(rng.integer(2, 30)));
    auto a = vpnu_norm(f, ModulusOfVariation::log(), 2.0, 1'000'000);
    auto b = vpnu_norm(f.scaled(2.0), ModulusOfVariation::log(), 2.0, 1'000'000);
    CHECK(approx_eq(b.variation, 2 * a.variation));
    CHECK(approx_eq(b.sup, 2 * a.sup));
    // the truncation past the reduced length is exact
    auto full = pvariation_profile(f, 2.0, 60);
    double sup = 0.0;
    for (std::size_t n = 1; n <= full.size(); ++n)
      sup = std::max(sup, full[n - 1] / ModulusOfVariation::log()(static_cast<std::int64_t>(n)));
    CHECK(approx_eq(sup, a.variation));
  }
}

TEST_CASE("pulse trains") {
  PulseTrain t{{{0.5, 2}, {1.0, 1}, {0.25, 3}}};
  CHECK(t.jump_count() == 12);
  auto f = on_unit(t.to_values());
  for (double p : {1.0, 2.0, 2.5}) {
    auto prof = pvariation_profile(f, p, 14);
    for (int n = 1; n <= 14; ++n) CHECK(approx_eq(pvariation_pulse_train(t, p, n), prof[n - 1]));
  }
  gen::Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    PulseTrain r;
    const auto groups = rng.integer(1, 3);
    for (int g = 0; g < groups; ++g) r.groups.push_back({rng.uniform(0.0, 2.0), rng.integer(1, 3)});
    auto values = r.to_values();
    if (values.size() > kBruteforceMaxPoints) continue;
    auto fr = on_unit(values);
    for (int n = 1; n <= 4; ++n)
      CHECK(approx_eq(pvariation_pulse_train(r, 1.5, n), pvariation_bruteforce(fr, 1.5, n).value));
  }
}
