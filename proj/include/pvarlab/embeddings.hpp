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


#ifndef PVARLAB_EMBEDDINGS_HPP
#define PVARLAB_EMBEDDINGS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pvarlab/modulus.hpp"
#include "pvarlab/phi.hpp"
#include "pvarlab/sampled_function.hpp"
#include "pvarlab/variation.hpp"

namespace pvarlab {

enum class CriterionVerdict { Embeds, Fails, Inconclusive };
const char* to_string(CriterionVerdict v) noexcept;

struct CriterionParams {
  /// Fails when T(H) > growth_factor * T(reference_fraction * H) ...
  double growth_factor = 10.0;
  double reference_fraction = 0.25;
  /// ... or when the log-log slope of T between those points reaches this.
  double fail_slope = 0.2;
};

struct CriterionReport {
  std::int64_t horizon = 0;
  std::vector<double> trace;  // trace[n-1] = max_{k<=n} k^{1/p} Phi_k^{-1}(1) / nu(n)
  double running_sup = 0.0;
  CriterionVerdict verdict = CriterionVerdict::Inconclusive;
};

/// Verdict from a trace: Fails on growth (factor or slope), Embeds when the
/// tail does not increase between H/2 and H, else Inconclusive.
CriterionVerdict criterion_verdict(std::span<const double> trace, const CriterionParams& params);

/// Trace of the embedding criterion for k <= horizon (horizon >= 8), using the
/// bisection inverse of Phi_k.
CriterionReport embedding_criterion(const PhiSequence& Phi, const ModulusOfVariation& nu, double p,
                                    std::int64_t horizon, const CriterionParams& params = {});

enum class CorollaryCase { BVq, Salem, LambdaBV, WatermanShiba, PhiLambda };
const char* to_string(CorollaryCase c) noexcept;

struct CorollaryParams {
  double q = 1.0;                        // BVq, WatermanShiba
  std::optional<OrliczFunction> phi;     // Salem, PhiLambda
  std::optional<LambdaSequence> lambda;  // LambdaBV, WatermanShiba, PhiLambda
};

/// The Phi-sequence a corollary case specialises.
PhiSequence corollary_phi(CorollaryCase c, const CorollaryParams& params);

struct CorollaryReport {
  CriterionReport report;     // from the case-specific closed expression
  CriterionReport reference;  // embedding_criterion on corollary_phi
  double max_abs_diff = 0.0;  // over the two traces
  bool consistent = false;    // max relative difference <= 1e-9
};

CorollaryReport corollary_criteria(CorollaryCase c, const CorollaryParams& params,
                                   const ModulusOfVariation& nu, double p, std::int64_t horizon,
                                   const CriterionParams& cparams = {});

/// Grid size handled by the exact mode of var_phi.
inline constexpr std::size_t kVarPhiExactMaxPoints = 14;

struct VarPhiResult {
  double value = 0.0;
  bool exact = false;  // false: lower bound from extrema differences
};

/// sup over selections of at most n_budget intervals (0 = unlimited) of
/// sum_j phi_j(d_(j)) with d sorted descending. Grids above the exact limit
/// need allow_heuristic, otherwise ErrorCode::BudgetExceeded.
VarPhiResult var_phi(const SampledFunction& f, const PhiSequence& Phi, std::int64_t n_budget = 0,
                     bool allow_heuristic = false);

struct WuCheck {
  double lhs = 0.0;  // (sum x_j^p)^{1/p}
  double rhs = 0.0;  // 16 max_{m<=n} m^{1/p} Phi_m^{-1}(var_budget)
  bool holds = false;
};

/// x nonincreasing, nonnegative and admissible: sum phi_j(x_j) <= var_budget
/// (else ErrorCode::Precondition).
WuCheck wu_bound_check(const PhiSequence& Phi, std::span<const double> x, double p,
                       double var_budget);

struct WitnessBlock {
  int k = 0;
  std::int64_t n = 0;  // n_k
  std::int64_t m = 0;  // m_k
  std::int64_t s = 0;  // largest s with 2s - 1 <= 2^{-k} n_k
  std::int64_t r = 0;  // min(m_k, s_k) pulses
  double height = 0.0;  // 2^{-k} Phi_{m_k}^{-1}(1)
  double criterion = 0.0;       // m_k^{1/p} Phi_{m_k}^{-1}(1) / nu(n_k), > 2^{4k}
  double ratio = 0.0;           // upsilon_p(n_k, f) / nu(n_k), exact
  double selection_ratio = 0.0;  // (2r_k - 1)^{1/p} h_k / nu(n_k)
  double selection_floor = 0.0;  // 2^{(-kp-k-1)/p} m_k^{1/p} Phi_{m_k}^{-1}(1) / nu(n_k)
  double var_term = 0.0;        // Phi_{2 r_k}(h_k)
};

struct Witness {
  std::vector<WitnessBlock> blocks;
  PulseTrain train;
  double var_phi_bound = 0.0;  // sum_k Phi_{2 r_k}(h_k)
  double var_phi_chain = 0.0;  // sum_k 2 Phi_{m_k}(h_k) <= sum_k 2^{1-k}
  bool certificate_a = false;  // var_phi_bound <= var_phi_chain <= 2
  bool certificate_b = false;  // ratio >= 2^k and selection bounds for every block
  std::optional<SampledFunction> function;  // materialised when small enough
  /// DP-verified ratios upsilon_p(n_k, f)/nu(n_k) on the materialised samples
  std::vector<double> dp_ratios;
};

struct WitnessOptions {
  std::int64_t search_budget = 1'000'000'000'000;  // largest n_k tried
  std::int64_t exact_scan = 1 << 20;  // every gamma up to here, then geometric steps
  std::size_t materialize_limit = 4096;  // grid points
  std::int64_t precondition_horizon = 1 << 16;
  CriterionParams criterion;
  unsigned jobs = 1;  // blocks searched concurrently
};

/// Counterexample f in Phi BV with upsilon_p(n_k, f)/nu(n_k) >= 2^k, k <= k_max <= 5.
/// Throws ErrorCode::Precondition unless the criterion verdict is Fails;
/// returns nullopt when the search budget runs out.
std::optional<Witness> witness_generate(const PhiSequence& Phi, const ModulusOfVariation& nu,
                                        double p, int k_max, const WitnessOptions& options = {});

}  // namespace pvarlab

#endif  // PVARLAB_EMBEDDINGS_HPP
