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

#include <chrono>
#include <cmath>
#include <vector>

#include "pvarlab/embeddings.hpp"
#include "pvarlab/error.hpp"
#include "pvarlab/tolerance.hpp"
#include "pvarlab/variation.hpp"
#include "support/generators.hpp"

using namespace pvarlab;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{0};
}

PhiSequence x_over_j() {
  return PhiSequence::orlicz_over_lambda(OrliczFunction::power(1.0), LambdaSequence::power(1.0));
}

std::vector<PhiSequence> phi_zoo() {
  return {PhiSequence::power_all(2.0),
          PhiSequence::power_all(1.5),
          PhiSequence::orlicz_all(OrliczFunction::exp_minus_one()),
          PhiSequence::orlicz_over_lambda(OrliczFunction::power(2.0), LambdaSequence::power(0.5)),
          x_over_j(),
          PhiSequence::custom({OrliczFunction::exp_minus_one(), OrliczFunction::power(2.0, 0.5),
                               OrliczFunction::power(2.0, 0.25)})};
}

}  // namespace

TEST_CASE("partial inverse examples") {
  CHECK(phi_partial_inverse(PhiSequence::power_all(2.0), 4, 1.0) == doctest::Approx(0.5).epsilon(1e-11));
  const auto sq_over_j =
      PhiSequence::orlicz_over_lambda(OrliczFunction::power(2.0), LambdaSequence::power(1.0));
  CHECK(phi_partial_inverse(sq_over_j, 2, 1.0) == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-11));
  const auto ex = PhiSequence::orlicz_all(OrliczFunction::exp_minus_one());
  CHECK(phi_partial_inverse(ex, 1, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-11));
  CHECK(ex.partial_inverse(1, 1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(phi_partial_inverse(ex, 3, 0.0) == 0.0);
}

TEST_CASE("partial inverse property across kinds") {
  gen::Rng rng(71);
  for (const auto& Phi : phi_zoo()) {
    for (int trial = 0; trial < 40; ++trial) {
      const auto n = rng.integer(1, 10000);
      const double y = std::exp(rng.uniform(-8.0, 8.0));
      const double x = phi_partial_inverse(Phi, n, y);
      CHECK(Phi.partial(n, x) == doctest::Approx(y).epsilon(1e-10));
      if (auto c = Phi.partial_inverse_closed(n, y)) CHECK(*c == doctest::Approx(x).epsilon(1e-10));
    }
  }
}

TEST_CASE("concave inverse scaling") {
  gen::Rng rng(72);
  for (const auto& Phi : phi_zoo()) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = rng.integer(1, 5000);
      const double x = std::exp(rng.uniform(-6.0, 6.0));
      const double a = rng.uniform(0.0, 1.0);
      CHECK(approx_le(Phi.partial_inverse(n, a * x), (1.0 + a) * Phi.partial_inverse(n, x), 1e-10));
    }
  }
}

TEST_CASE("criterion known answers") {
  const auto bv2 = PhiSequence::power_all(2.0);
  const auto e = embedding_criterion(bv2, ModulusOfVariation::power(0.5), 1.0, 4096);
  CHECK(e.verdict == CriterionVerdict::Embeds);
  for (double t : e.trace) CHECK(t == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(e.running_sup == doctest::Approx(1.0).epsilon(1e-10));

  const auto f = embedding_criterion(bv2, ModulusOfVariation::log(), 1.0, 4096);
  CHECK(f.verdict == CriterionVerdict::Fails);
  CHECK(f.trace[99] == doctest::Approx(std::sqrt(100.0) / std::log(101.0)).epsilon(1e-10));

  // BV_p itself
  for (double p : {1.0, 2.0, 3.0}) {
    const auto r = embedding_criterion(PhiSequence::power_all(p), ModulusOfVariation::log(), p, 2048);
    CHECK(r.verdict == CriterionVerdict::Embeds);
    CHECK(r.trace[2047] == doctest::Approx(1.0 / std::log(2049.0)).epsilon(1e-10));
  }
  CHECK(code_of([&] { embedding_criterion(bv2, ModulusOfVariation::log(), 1.0, 4); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("criterion verdict on a slowly growing trace") {
  // sqrt(n)/log grows but never by 10x between H/4 and H; the slope rule catches it.
  std::vector<double> t;
  for (int n = 1; n <= 1 << 14; ++n) t.push_back(std::sqrt(n) / std::log(n + 1.0));
  CHECK(criterion_verdict(t, {}) == CriterionVerdict::Fails);
  std::vector<double> flat(64, 3.0);
  CHECK(criterion_verdict(flat, {}) == CriterionVerdict::Embeds);
  std::vector<double> creep;
  for (int n = 1; n <= 1024; ++n) creep.push_back(std::log(std::log(n + 3.0)));
  CHECK(criterion_verdict(creep, {}) == CriterionVerdict::Inconclusive);
}

TEST_CASE("corollary specialisations agree with the general criterion") {
  const auto nu = ModulusOfVariation::log();
  CorollaryParams bvq;
  bvq.q = 2.0;
  const auto i = corollary_criteria(CorollaryCase::BVq, bvq, ModulusOfVariation::power(0.5), 1.0, 2048);
  CHECK(i.consistent);
  CHECK(i.report.verdict == CriterionVerdict::Embeds);
  CHECK(i.report.running_sup == doctest::Approx(1.0).epsilon(1e-12));

  CorollaryParams salem;
  salem.phi = OrliczFunction::power(2.0);
  const auto ii = corollary_criteria(CorollaryCase::Salem, salem, nu, 1.0, 2048);
  const auto i2 = corollary_criteria(CorollaryCase::BVq, bvq, nu, 1.0, 2048);
  CHECK(ii.consistent);
  for (std::size_t n = 0; n < ii.report.trace.size(); ++n)
    CHECK(ii.report.trace[n] == doctest::Approx(i2.report.trace[n]).epsilon(1e-15));

  CorollaryParams lam;
  lam.lambda = LambdaSequence::power(1.0);
  std::vector<double> table;
  for (int n = 1; n <= 2048; ++n) table.push_back(n / std::log(n + 2.0));
  const auto iii = corollary_criteria(CorollaryCase::LambdaBV, lam, ModulusOfVariation::table(table), 1.0, 2048);
  CHECK(iii.consistent);
  double harmonic = 0.0, best = 0.0;
  for (int k = 1; k <= 100; ++k) {
    harmonic += 1.0 / k;
    best = std::max(best, k / harmonic);
  }
  CHECK(iii.report.trace[99] == doctest::Approx(best / table[99]).epsilon(1e-10));

  CorollaryParams ws;
  ws.q = 2.0;
  ws.lambda = LambdaSequence::power(0.5);
  CHECK(corollary_criteria(CorollaryCase::WatermanShiba, ws, nu, 1.5, 2048).consistent);

  CorollaryParams pl;
  pl.phi = OrliczFunction::exp_minus_one();
  pl.lambda = LambdaSequence::table({1.0, 2.0, 2.0, 5.0});
  CHECK(corollary_criteria(CorollaryCase::PhiLambda, pl, nu, 2.0, 2048).consistent);

  CHECK(code_of([&] { corollary_criteria(CorollaryCase::Salem, {}, nu, 1.0, 64); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("var_phi examples") {
  const auto id = PhiSequence::power_all(1.0);
  CHECK(var_phi(SampledFunction::uniform(0, 1, {0.0, 0.25, 0.5, 1.0}), id).value ==
        doctest::Approx(1.0));
  const auto zig = SampledFunction::uniform(0, 1, {0, 1, 0, 1, 0});
  const auto r = var_phi(zig, x_over_j());
  CHECK(r.exact);
  CHECK(r.value == doctest::Approx(25.0 / 12.0).epsilon(1e-14));
  CHECK(var_phi(zig, x_over_j(), 2).value == doctest::Approx(1.5));
  CHECK(var_phi(SampledFunction::uniform(0, 1, {2, 2, 2}), id).value == 0.0);

  std::vector<double> big(20);
  for (std::size_t i = 0; i < big.size(); ++i) big[i] = static_cast<double>(i % 2);
  const auto fb = SampledFunction::uniform(0, 1, big);
  CHECK(code_of([&] { var_phi(fb, id); }) == ErrorCode::BudgetExceeded);
  const auto h = var_phi(fb, x_over_j(), 0, true);
  CHECK_FALSE(h.exact);
  double harmonic = 0.0;
  for (int j = 1; j <= 19; ++j) harmonic += 1.0 / j;
  CHECK(h.value == doctest::Approx(harmonic));
}

TEST_CASE("var_phi with x^p equals the p-variation to the p at the swing count") {
  gen::Rng rng(73);
  for (int trial = 0; trial < 60; ++trial) {
    const auto L = static_cast<std::size_t>(rng.integer(2, 9));
    const auto f = SampledFunction::uniform(0, 1, rng.shaped_values(L));
    const double p = rng.uniform(1.0, 3.0);
    const auto swings = static_cast<int>(extrema_indices(f.values()).size()) - 1;
    const double vp = swings > 0 ? pvariation_dp(f, p, swings).value : 0.0;
    const auto r = var_phi(f, PhiSequence::power_all(p));
    CHECK(r.exact);
    CHECK(r.value == doctest::Approx(std::pow(vp, p)).epsilon(1e-10));
  }
}

TEST_CASE("Wu bound") {
  const auto sq = PhiSequence::power_all(2.0);
  const std::vector<double> x{0.5, 0.5};
  const auto w = wu_bound_check(sq, x, 2.0, 0.5);
  CHECK(w.lhs == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(w.rhs == doctest::Approx(16.0 * std::sqrt(0.5)).epsilon(1e-12));
  CHECK(w.holds);
  const std::vector<double> zero{0.0, 0.0, 0.0};
  const auto z = wu_bound_check(sq, zero, 1.0, 1.0);
  CHECK(z.lhs == 0.0);
  CHECK(z.rhs > 0.0);
  CHECK(z.holds);
  const std::vector<double> up{0.1, 0.2};
  CHECK(code_of([&] { wu_bound_check(sq, up, 1.0, 1.0); }) == ErrorCode::Precondition);
  CHECK(code_of([&] { wu_bound_check(sq, x, 1.0, 0.25); }) == ErrorCode::Precondition);
}

TEST_CASE("Wu bound on random admissible sequences") {
  gen::Rng rng(74);
  for (const auto& Phi : phi_zoo()) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 40));
      auto x = rng.values(n, 0.0, rng.uniform(0.01, 3.0));
      std::sort(x.begin(), x.end(), std::greater<>());
      double used = 0.0;
      for (std::size_t j = 0; j < n; ++j) used += Phi.phi(static_cast<std::int64_t>(j) + 1, x[j]);
      const double budget = used * rng.uniform(1.0, 2.0) + 1e-300;
      const double p = rng.uniform(1.0, 4.0);
      CHECK(wu_bound_check(Phi, x, p, budget).holds);
    }
  }
}

TEST_CASE("witness for BV_2 against the log modulus") {
  const auto start = std::chrono::steady_clock::now();
  const auto w = witness_generate(PhiSequence::power_all(2.0), ModulusOfVariation::log(), 1.0, 3);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(w.has_value());
  CHECK(secs < 120.0);
  CHECK(w->certificate_a);
  CHECK(w->certificate_b);
  CHECK(w->var_phi_bound <= 2.0);
  REQUIRE(w->blocks.size() == 3);
  for (const auto& b : w->blocks) {
    CHECK(b.n > (std::int64_t{4} << b.k));
    CHECK(b.m <= b.n);
    CHECK(b.criterion > std::ldexp(1.0, 4 * b.k));
    CHECK(2 * b.s - 1 <= (b.n >> b.k));
    CHECK(b.ratio >= std::ldexp(1.0, b.k));
  }
  // root growth keeps the argmax at n_k
  CHECK(w->blocks[0].m == w->blocks[0].n);
}

TEST_CASE("materialised witness checked by dynamic programming") {
  const auto w = witness_generate(PhiSequence::power_all(50.0), ModulusOfVariation::log(), 1.0, 2);
  REQUIRE(w.has_value());
  REQUIRE(w->function.has_value());
  REQUIRE(w->dp_ratios.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(w->dp_ratios[i] == doctest::Approx(w->blocks[i].ratio).epsilon(1e-9));
    CHECK(w->dp_ratios[i] >= std::ldexp(1.0, w->blocks[i].k));
  }
  const auto& f = *w->function;
  CHECK(f.front() == 0.0);
  CHECK(f.back() == 1.0);
  CHECK(f.values().back() == 0.0);
  CHECK(f.sup_abs() == doctest::Approx(w->blocks[0].height));
}

TEST_CASE("witness preconditions and budget") {
  CHECK(code_of([] {
          witness_generate(PhiSequence::power_all(2.0), ModulusOfVariation::power(0.5), 1.0, 2);
        }) == ErrorCode::Precondition);
  CHECK(code_of([] {
          witness_generate(PhiSequence::power_all(1.5), ModulusOfVariation::log(), 1.5, 2);
        }) == ErrorCode::Precondition);
  WitnessOptions tight;
  tight.search_budget = 1000;
  CHECK_FALSE(witness_generate(PhiSequence::power_all(2.0), ModulusOfVariation::log(), 1.0, 3, tight)
                  .has_value());
  CHECK(code_of([] {
          witness_generate(PhiSequence::power_all(2.0), ModulusOfVariation::log(), 1.0, 6);
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("witness search is independent of the job count") {
  WitnessOptions one, two;
  two.jobs = 3;
  const auto Phi = PhiSequence::power_all(4.0);
  const auto a = witness_generate(Phi, ModulusOfVariation::log(), 1.0, 3, one);
  const auto b = witness_generate(Phi, ModulusOfVariation::log(), 1.0, 3, two);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(a->blocks[i].n == b->blocks[i].n);
    CHECK(a->blocks[i].ratio == b->blocks[i].ratio);
  }
}
