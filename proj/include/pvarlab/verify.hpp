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


#ifndef PVARLAB_VERIFY_HPP
#define PVARLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pvarlab {

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t violations = 0;
  std::string detail;  // deterministic; no timings
  bool passed() const { return violations == 0 && cases > 0; }
};

// Property checks shared by the verify battery and the acceptance runner.
// Each takes its sizes explicitly and is deterministic in `seed`.

/// DP against brute force on random functions with at most max_points samples.
CheckResult check_dp_oracle(std::uint64_t seed, int functions, int max_points, int max_n,
                            double tol = 1e-12);
/// upsilon_p <= upsilon_1 <= upsilon_p n^{1-1/p} on the same matrix.
CheckResult check_holder_chain(std::uint64_t seed, int functions, int max_points, int max_n);

struct KSandwichCounts {
  CheckResult construction;  // Var_p(g_M) <= upsilon, ||f - g_M|| <= 2 upsilon / M^{1/p}
  CheckResult upper_factor;  // upper <= 5 lower when lower > 0
  CheckResult literal;       // lower <= upper
  CheckResult factor_two;    // lower <= 2 ||f - g_M|| + t Var_p(g_M)
  CheckResult competitors_literal;    // lower <= ||f - g|| + t Var_p(g) for random PL g
  CheckResult competitors_factor_two; // lower <= 2 ||f - g|| + t Var_p(g)
};
KSandwichCounts check_kfunctional(std::uint64_t seed, int functions, int competitors);

/// 1 - 1/p <= Q_k <= 2^{-1/p}, Q_k nonincreasing, k <= k_max, p in {1, 1.5, 2, 4}.
CheckResult check_lemma_q(std::int64_t k_max);
/// (a, b, n) matrix with both 2a < b and 2a >= b.
CheckResult check_sine_integral(int cases);
/// Lemma bracket for theta on six (omega, nu, p) families, n in [2, n_max].
CheckResult check_theta_bracket(std::int64_t n_max);
/// Five-series verdict agreement plus the dual sandwich at H/4, H/2, H.
CheckResult check_unif2(std::int64_t horizon);
/// |integral K_n - pi| <= 1e-8 for n <= n_max.
CheckResult check_fejer_integral(int n_max);
/// V_{p,nu}(F_n f) <= 1.05 V_{p,nu}(f) on sampled test functions.
CheckResult check_fejer_contraction();
/// Corollary traces equal the general criterion (1e-9) in all five cases, plus
/// the known answers for BV_2.
CheckResult check_corollaries(std::int64_t horizon);
/// Wu's lemma with constant 16 on random admissible sequences.
CheckResult check_wu(std::uint64_t seed, int per_kind);
/// Symmetry, monotonicity and triangle inequality for all four norm families.
CheckResult check_norms(std::uint64_t seed, int pairs);
/// Marcinkiewicz fundamental sequence equals n^{1/p}/nu(n), bitwise.
CheckResult check_fundamental(std::int64_t n_max);
/// Coefficient decay sup for the square wave, nu = log, p = 1, N = 256.
CheckResult check_coeff_decay();
/// Var_Phi with x^p equals upsilon_p(swings)^p.
CheckResult check_var_phi(std::uint64_t seed, int cases);
/// Witness certificates for BV_2 against log(n+1), p = 1.
CheckResult check_witness(int k_max);

/// The full battery at its default sizes, run on up to `jobs` threads.
std::vector<CheckResult> run_verify(std::uint64_t seed, unsigned jobs = 1);

}  // namespace pvarlab

#endif  // PVARLAB_VERIFY_HPP
