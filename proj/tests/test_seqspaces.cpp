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

#include <algorithm>
#include <cmath>
#include <vector>

#include "pvarlab/error.hpp"
#include "pvarlab/modulus.hpp"
#include "pvarlab/seqspaces.hpp"
#include "pvarlab/tolerance.hpp"
#include "pvarlab/variation.hpp"
#include "support/generators.hpp"

using namespace pvarlab;

namespace {

std::vector<SequenceSpace> space_zoo() {
  return {MarcinkiewiczSpace{ModulusOfVariation::power(0.5), 1.0},
          MarcinkiewiczSpace{ModulusOfVariation::log(), 2.0},
          LorentzSpace{LorentzWeight::power(0.5), 2.0},
          LorentzSpace{LorentzWeight::power(1.0), 1.0},
          OrliczSpace{OrliczFunction::power(3.0)},
          OrliczSpace{OrliczFunction::exp_minus_one()},
          ModularSpace{PhiSequence::orlicz_over_lambda(OrliczFunction::power(2.0),
                                                       LambdaSequence::power(1.0))},
          ModularSpace{PhiSequence::power_all(1.5)}};
}

std::vector<double> random_seq(gen::Rng& rng, std::size_t n) {
  auto x = rng.values(n, -2.0, 2.0);
  for (auto& v : x)
    if (rng.coin() && rng.coin()) v = 0.0;
  return x;
}

}  // namespace

TEST_CASE("rearrangement") {
  CHECK(rearrange(std::vector<double>{3, -1, 2}) == std::vector<double>{3, 2, 1});
  CHECK(rearrange(std::vector<double>{5, 4, 4, 0}) == std::vector<double>{5, 4, 4, 0});
  CHECK(rearrange(std::vector<double>{0, 0, 0}) == std::vector<double>{0, 0, 0});
}

TEST_CASE("Marcinkiewicz norm") {
  const auto nu = ModulusOfVariation::power(0.5);
  CHECK(marcinkiewicz_norm(std::vector<double>{1, 0, 0}, nu, 1.0) == 1.0 / nu(1));
  // log with p = 2 is not validated: eps_2(2) > eps_2(1), and the rearranged sup exceeds 1
  std::vector<double> e2{epsilon_p(ModulusOfVariation::log(), 2.0, 1), epsilon_p(ModulusOfVariation::log(), 2.0, 2)};
  CHECK(marcinkiewicz_norm(e2, ModulusOfVariation::log(), 2.0) > 1.0);
  // moduli with nu^p concave, so eps_p is already nonincreasing
  for (double p : {1.0, 1.5, 2.0}) {
    for (const auto& mod : {p == 1.0 ? ModulusOfVariation::log() : ModulusOfVariation::power(0.5 / p),
                            ModulusOfVariation::power(1.0 / p)}) {
      std::vector<double> eps;
      for (int k = 1; k <= 300; ++k) eps.push_back(epsilon_p(mod, p, k));
      CHECK(marcinkiewicz_norm(eps, mod, p) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  gen::Rng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_seq(rng, static_cast<std::size_t>(rng.integer(1, 30)));
    const double p = rng.uniform(1.0, 3.0);
    const auto xs = rearrange(x);
    double best = 0.0;
    for (std::size_t n = 1; n <= xs.size(); ++n) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += std::pow(xs[j], p);
      if (xs[n - 1] > 0.0) best = std::max(best, std::pow(s, 1.0 / p) / nu(static_cast<std::int64_t>(n)));
    }
    CHECK(marcinkiewicz_norm(x, nu, p) == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("Lorentz norm") {
  const auto w = LorentzWeight::table({1.0, 0.5, 1.0 / 3.0});
  CHECK(lorentz_norm(std::vector<double>{3, 1, 2}, w, 1.0) == doctest::Approx(13.0 / 3.0).epsilon(1e-14));
  CHECK(lorentz_norm(std::vector<double>{1, 0, 0}, w, 2.0) == doctest::Approx(1.0));
  CHECK(lorentz_norm(std::vector<double>{0, 1, 1}, w, 1.0) == doctest::Approx(1.5));
  CHECK_THROWS_AS(LorentzWeight::table({1.0, 2.0}), Error);
}

TEST_CASE("Orlicz and modular norms") {
  CHECK(orlicz_norm(std::vector<double>{3, 4}, OrliczFunction::power(2.0)) ==
        doctest::Approx(5.0).epsilon(1e-13));
  CHECK(orlicz_norm(std::vector<double>{1}, OrliczFunction::exp_minus_one()) ==
        doctest::Approx(1.0 / std::log(2.0)).epsilon(1e-13));
  CHECK(orlicz_norm(std::vector<double>{1, 1}, OrliczFunction::power(3.0)) ==
        doctest::Approx(std::cbrt(2.0)).epsilon(1e-13));
  CHECK(orlicz_norm(std::vector<double>{0, 0}, OrliczFunction::power(2.0)) == 0.0);

  gen::Rng rng(82);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_seq(rng, 12);
    CHECK(modular_norm(x, PhiSequence::power_all(2.0)) ==
          doctest::Approx(orlicz_norm(x, OrliczFunction::power(2.0))).epsilon(1e-13));
  }
  const auto sq_over_j =
      PhiSequence::orlicz_over_lambda(OrliczFunction::power(2.0), LambdaSequence::power(1.0));
  CHECK(modular_norm(std::vector<double>{1, 1}, sq_over_j) ==
        doctest::Approx(std::sqrt(1.5)).epsilon(1e-13));
  CHECK(modular_norm(std::vector<double>{1, 0}, PhiSequence::power_all(2.0)) ==
        doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("fundamental sequence") {
  const SequenceSpace m1 = MarcinkiewiczSpace{ModulusOfVariation::power(0.5), 1.0};
  CHECK(fundamental_sequence(m1, 1) == 1.0);
  CHECK(fundamental_sequence(m1, 9) == doctest::Approx(3.0).epsilon(1e-15));
  const SequenceSpace lz = LorentzSpace{LorentzWeight::power(1.0), 1.0};
  CHECK(fundamental_sequence(lz, 3) == doctest::Approx(11.0 / 6.0).epsilon(1e-14));
  const SequenceSpace oz = OrliczSpace{OrliczFunction::power(2.0)};
  CHECK(fundamental_sequence(oz, 16) == doctest::Approx(4.0).epsilon(1e-12));
  for (double p : {1.0, 2.0, 3.0}) {
    const auto nu = p == 1.0 ? ModulusOfVariation::log() : ModulusOfVariation::power(0.3);
    const SequenceSpace m = MarcinkiewiczSpace{nu, p};
    for (std::int64_t n : {1, 2, 7, 100, 1000})
      CHECK(fundamental_sequence(m, n) == std::pow(static_cast<double>(n), 1.0 / p) / nu(n));
  }
}

TEST_CASE("dual harmonic estimate") {
  const auto one = dual_harmonic_estimate(ModulusOfVariation::log(), 1.0, 1);
  CHECK(one.first == doctest::Approx(std::log(2.0)));
  CHECK(one.second == doctest::Approx(std::log(2.0)));
  const auto lg = dual_harmonic_estimate(ModulusOfVariation::log(), 1.0, 10000);
  CHECK(std::isfinite(lg.first));
  CHECK(lg.first <= lg.second);
  const auto rt = dual_harmonic_estimate(ModulusOfVariation::power(0.5), 2.0, 10000);
  double h = 0.0;
  for (int k = 1; k <= 10000; ++k) h += 1.0 / k;
  CHECK(rt.first == doctest::Approx(h).epsilon(1e-12));
  CHECK(rt.second == doctest::Approx(h).epsilon(1e-12));
  for (std::int64_t H : {1, 10, 100, 1000}) {
    for (double p : {1.0, 2.0, 4.0}) {
      const auto r = dual_harmonic_estimate(ModulusOfVariation::power(1.0 / (2.0 * p)), p, H);
      CHECK(approx_le(r.first, r.second));
    }
  }
}

TEST_CASE("symmetry, monotonicity and the triangle inequality") {
  gen::Rng rng(83);
  for (const auto& space : space_zoo()) {
    for (int trial = 0; trial < 60; ++trial) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 25));
      auto x = random_seq(rng, n);
      auto y = random_seq(rng, n);
      const double nx = sequence_norm(space, x);
      CHECK(sequence_norm(space, rearrange(x)) == doctest::Approx(nx).epsilon(1e-12));
      auto flipped = x;
      std::reverse(flipped.begin(), flipped.end());
      for (auto& v : flipped) v = -v;
      CHECK(sequence_norm(space, flipped) == doctest::Approx(nx).epsilon(1e-12));

      auto smaller = x;
      for (auto& v : smaller) v *= rng.uniform(0.0, 1.0);
      CHECK(approx_le(sequence_norm(space, smaller), nx, 1e-10));

      std::vector<double> sum(n);
      for (std::size_t i = 0; i < n; ++i) sum[i] = x[i] + y[i];
      CHECK(approx_le(sequence_norm(space, sum), nx + sequence_norm(space, y), 1e-10));
    }
  }
}

TEST_CASE("Marcinkiewicz norm of pulse jumps equals the V_p[nu] variation part") {
  gen::Rng rng(84);
  for (int trial = 0; trial < 40; ++trial) {
    PulseTrain train;
    std::vector<double> jumps;
    const auto groups = rng.integer(1, 4);
    for (int g = 0; g < groups; ++g) {
      const double h = rng.uniform(0.1, 2.0);
      const auto c = rng.integer(1, 5);
      train.groups.push_back({h, c});
      for (int i = 0; i < 2 * c; ++i) jumps.push_back(h);
    }
    const double p = rng.uniform(1.0, 3.0);
    const auto nu = rng.coin() ? ModulusOfVariation::log() : ModulusOfVariation::power(1.0 / p);
    const auto f = SampledFunction::uniform(0, 1, train.to_values());
    const auto v = vpnu_norm(f, nu, p, 1000);
    CHECK(v.variation == doctest::Approx(marcinkiewicz_norm(jumps, nu, p)).epsilon(1e-11));
  }
}
