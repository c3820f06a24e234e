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


#include "pvarlab/embeddings.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "pvarlab/error.hpp"
#include "pvarlab/parallel.hpp"
#include "pvarlab/tolerance.hpp"

namespace pvarlab {

namespace {

void check_p(double p) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument, "p must be finite and >= 1");
}

// Largest usable index of nu, capped at `limit`.
std::int64_t nu_limit(const ModulusOfVariation& nu, std::int64_t limit) {
  if (auto m = nu.max_index()) return std::min(*m, limit);
  return limit;
}

CriterionReport trace_report(std::int64_t horizon, const ModulusOfVariation& nu,
                             const CriterionParams& params,
                             const std::function<double(std::int64_t)>& term) {
  require(horizon >= 8, ErrorCode::InvalidArgument, "criterion: horizon must be >= 8");
  nu.require_index(horizon);
  CriterionReport rep;
  rep.horizon = horizon;
  rep.trace.resize(static_cast<std::size_t>(horizon));
  double best = 0.0;
  for (std::int64_t k = 1; k <= horizon; ++k) {
    best = std::max(best, term(k));
    const double t = best / nu(k);
    rep.trace[static_cast<std::size_t>(k - 1)] = t;
    rep.running_sup = std::max(rep.running_sup, t);
  }
  rep.verdict = criterion_verdict(rep.trace, params);
  return rep;
}

}  // namespace

const char* to_string(CriterionVerdict v) noexcept {
  switch (v) {
    case CriterionVerdict::Embeds: return "embeds";
    case CriterionVerdict::Fails: return "fails";
    case CriterionVerdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(CorollaryCase c) noexcept {
  switch (c) {
    case CorollaryCase::BVq: return "bvq";
    case CorollaryCase::Salem: return "salem";
    case CorollaryCase::LambdaBV: return "lambda";
    case CorollaryCase::WatermanShiba: return "waterman-shiba";
    case CorollaryCase::PhiLambda: return "phi-lambda";
  }
  return "?";
}

CriterionVerdict criterion_verdict(std::span<const double> trace, const CriterionParams& params) {
  require(trace.size() >= 8, ErrorCode::InvalidArgument, "criterion: trace too short");
  require(params.growth_factor > 1.0 && params.reference_fraction > 0.0 &&
              params.reference_fraction < 0.5 && params.fail_slope > 0.0,
          ErrorCode::InvalidArgument, "criterion: bad parameters");
  const auto H = trace.size();
  const auto ref = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(params.reference_fraction * static_cast<double>(H))));
  const double tH = trace[H - 1];
  const double tref = trace[ref - 1];
  const double thalf = trace[H / 2 - 1];
  if (tref > 0.0) {
    if (tH > params.growth_factor * tref) return CriterionVerdict::Fails;
    const double slope = std::log(tH / tref) / std::log(static_cast<double>(H) / static_cast<double>(ref));
    if (slope >= params.fail_slope) return CriterionVerdict::Fails;
  }
  if (tH <= thalf * (1.0 + 1e-12)) return CriterionVerdict::Embeds;
  return CriterionVerdict::Inconclusive;
}

CriterionReport embedding_criterion(const PhiSequence& Phi, const ModulusOfVariation& nu, double p,
                                    std::int64_t horizon, const CriterionParams& params) {
  check_p(p);
  return trace_report(horizon, nu, params, [&](std::int64_t k) {
    return std::pow(static_cast<double>(k), 1.0 / p) * phi_partial_inverse(Phi, k, 1.0);
  });
}

PhiSequence corollary_phi(CorollaryCase c, const CorollaryParams& params) {
  auto need_phi = [&] {
    require(params.phi.has_value(), ErrorCode::InvalidArgument, "corollary: phi required");
    return *params.phi;
  };
  auto need_lambda = [&] {
    require(params.lambda.has_value(), ErrorCode::InvalidArgument, "corollary: lambda required");
    return *params.lambda;
  };
  switch (c) {
    case CorollaryCase::BVq: return PhiSequence::power_all(params.q);
    case CorollaryCase::Salem: return PhiSequence::orlicz_all(need_phi());
    case CorollaryCase::LambdaBV:
      return PhiSequence::orlicz_over_lambda(OrliczFunction::power(1.0), need_lambda());
    case CorollaryCase::WatermanShiba:
      return PhiSequence::orlicz_over_lambda(OrliczFunction::power(params.q), need_lambda());
    case CorollaryCase::PhiLambda: return PhiSequence::orlicz_over_lambda(need_phi(), need_lambda());
  }
  fail(ErrorCode::InvalidArgument, "corollary: unknown case");
}

CorollaryReport corollary_criteria(CorollaryCase c, const CorollaryParams& params,
                                   const ModulusOfVariation& nu, double p, std::int64_t horizon,
                                   const CriterionParams& cparams) {
  check_p(p);
  const PhiSequence Phi = corollary_phi(c, params);
  const double ip = 1.0 / p;
  std::function<double(std::int64_t)> term;
  switch (c) {
    case CorollaryCase::BVq:
      term = [=](std::int64_t k) { return std::pow(static_cast<double>(k), ip - 1.0 / params.q); };
      break;
    case CorollaryCase::Salem:
      term = [&, ip](std::int64_t k) {
        const double kd = static_cast<double>(k);
        return std::pow(kd, ip) * params.phi->inverse(1.0 / kd);
      };
      break;
    case CorollaryCase::LambdaBV:
      term = [&, ip](std::int64_t k) {
        return std::pow(static_cast<double>(k), ip) / params.lambda->reciprocal_sum(k);
      };
      break;
    case CorollaryCase::WatermanShiba:
      term = [&, ip](std::int64_t k) {
        return std::pow(static_cast<double>(k), ip) *
               std::pow(params.lambda->reciprocal_sum(k), -1.0 / params.q);
      };
      break;
    case CorollaryCase::PhiLambda:
      term = [&, ip](std::int64_t k) {
        return std::pow(static_cast<double>(k), ip) *
               params.phi->inverse(1.0 / params.lambda->reciprocal_sum(k));
      };
      break;
  }
  CorollaryReport out;
  out.report = trace_report(horizon, nu, cparams, term);
  out.reference = embedding_criterion(Phi, nu, p, horizon, cparams);
  double rel = 0.0;
  for (std::size_t i = 0; i < out.report.trace.size(); ++i) {
    const double a = out.report.trace[i], b = out.reference.trace[i];
    out.max_abs_diff = std::max(out.max_abs_diff, std::fabs(a - b));
    const double scale = std::max(std::fabs(a), std::fabs(b));
    if (scale > 0.0) rel = std::max(rel, std::fabs(a - b) / scale);
  }
  out.consistent = rel <= 1e-9;
  return out;
}

namespace {

double phi_sum_sorted(std::vector<double> d, const PhiSequence& Phi, std::int64_t n_budget) {
  std::sort(d.begin(), d.end(), std::greater<>());
  if (n_budget > 0 && static_cast<std::int64_t>(d.size()) > n_budget)
    d.resize(static_cast<std::size_t>(n_budget));
  CompensatedSum s;
  for (std::size_t j = 0; j < d.size(); ++j) s.add(Phi.phi(static_cast<std::int64_t>(j) + 1, d[j]));
  return s.value();
}

}  // namespace

VarPhiResult var_phi(const SampledFunction& f, const PhiSequence& Phi, std::int64_t n_budget,
                     bool allow_heuristic) {
  require(n_budget >= 0, ErrorCode::InvalidArgument, "var_phi: n_budget must be >= 0");
  const auto v = f.values();
  const std::size_t L = v.size();
  if (L <= kVarPhiExactMaxPoints) {
    const std::size_t cap = n_budget > 0 ? static_cast<std::size_t>(n_budget) : L;
    double best = 0.0;
    std::vector<double> diffs;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      best = std::max(best, phi_sum_sorted(diffs, Phi, 0));
      if (diffs.size() == cap) return;
      for (std::size_t a = start; a + 1 < L; ++a)
        for (std::size_t b = a + 1; b < L; ++b) {
          diffs.push_back(std::fabs(v[b] - v[a]));
          rec(b);
          diffs.pop_back();
        }
    };
    rec(0);
    return {best, true};
  }
  require(allow_heuristic, ErrorCode::BudgetExceeded,
          "var_phi: grid exceeds the exact limit of " + std::to_string(kVarPhiExactMaxPoints) +
              " points");
  const auto idx = extrema_indices(v);
  std::vector<double> d;
  for (std::size_t i = 1; i < idx.size(); ++i) d.push_back(std::fabs(v[idx[i]] - v[idx[i - 1]]));
  return {phi_sum_sorted(std::move(d), Phi, n_budget), false};
}

WuCheck wu_bound_check(const PhiSequence& Phi, std::span<const double> x, double p,
                       double var_budget) {
  check_p(p);
  require(!x.empty(), ErrorCode::InvalidArgument, "wu: x must be nonempty");
  require(std::isfinite(var_budget) && var_budget > 0.0, ErrorCode::InvalidArgument,
          "wu: budget must be finite and > 0");
  CompensatedSum used, lp;
  for (std::size_t j = 0; j < x.size(); ++j) {
    require(std::isfinite(x[j]) && x[j] >= 0.0, ErrorCode::InvalidArgument,
            "wu: x must be finite and nonnegative");
    require(j == 0 || x[j] <= x[j - 1], ErrorCode::Precondition, "wu: x must be nonincreasing");
    used.add(Phi.phi(static_cast<std::int64_t>(j) + 1, x[j]));
    lp.add(std::pow(x[j], p));
  }
  require(approx_le(used.value(), var_budget), ErrorCode::Precondition,
          "wu: sum phi_j(x_j) exceeds the variation budget");
  WuCheck out;
  out.lhs = std::pow(lp.value(), 1.0 / p);
  double best = 0.0;
  for (std::int64_t m = 1; m <= static_cast<std::int64_t>(x.size()); ++m)
    best = std::max(best, std::pow(static_cast<double>(m), 1.0 / p) * Phi.partial_inverse(m, var_budget));
  out.rhs = 16.0 * best;
  out.holds = approx_le(out.lhs, out.rhs);
  return out;
}

std::optional<Witness> witness_generate(const PhiSequence& Phi, const ModulusOfVariation& nu,
                                        double p, int k_max, const WitnessOptions& opt) {
  check_p(p);
  require(k_max >= 1 && k_max <= 5, ErrorCode::InvalidArgument, "witness: k_max must be in [1, 5]");
  require(opt.search_budget >= 8 && opt.exact_scan >= 1, ErrorCode::InvalidArgument,
          "witness: bad search options");
  const auto pre_h = nu_limit(nu, opt.precondition_horizon);
  const auto pre = embedding_criterion(Phi, nu, p, pre_h, opt.criterion);
  require(pre.verdict == CriterionVerdict::Fails, ErrorCode::Precondition,
          std::string("witness: criterion verdict is ") + to_string(pre.verdict) +
              ", a counterexample needs 'fails'");

  const std::int64_t budget = nu_limit(nu, opt.search_budget);
  const double ip = 1.0 / p;
  auto g = [&](std::int64_t gamma) {
    return std::pow(static_cast<double>(gamma), ip) * Phi.partial_inverse(gamma, 1.0);
  };
  auto next = [&](std::int64_t n) {
    if (n < opt.exact_scan) return n + 1;
    return std::max(n + 1, static_cast<std::int64_t>(static_cast<double>(n) * (1.0 + 1.0 / 1024.0)));
  };

  // Each block searches its own n_k; the conditions do not couple different k.
  auto search = [&](std::size_t idx) -> std::optional<WitnessBlock> {
    const int k = static_cast<int>(idx) + 1;
    const std::int64_t two_k = std::int64_t{1} << k;
    const double target = std::ldexp(1.0, 4 * k);
    std::int64_t n = 0, best_arg = 0;
    double best_val = -1.0;
    for (;;) {
      n = next(n);
      if (n > budget) return std::nullopt;
      const double gv = g(n);
      if (gv > best_val) best_val = gv, best_arg = n;
      if (n <= 4 * two_k) continue;
      // 2^{-k} n odd would let the last zero of this block touch the next one
      if (n % two_k == 0 && ((n / two_k) & 1) == 1) continue;
      if (best_val / nu(n) > target) break;
    }
    WitnessBlock b;
    b.k = k;
    b.n = n;
    b.m = best_arg;
    b.s = (n / two_k + 1) / 2;  // largest s with 2s - 1 <= floor(n / 2^k)
    b.r = std::min(b.m, b.s);
    b.height = std::ldexp(Phi.partial_inverse(b.m, 1.0), -k);
    b.criterion = best_val / nu(n);
    b.var_term = Phi.partial(2 * b.r, b.height);
    return b;
  };
  Witness w;
  for (auto& b : parallel_map(static_cast<std::size_t>(k_max), opt.jobs, search)) {
    if (!b) return std::nullopt;
    w.blocks.push_back(*b);
  }

  for (const auto& b : w.blocks) w.train.groups.push_back({b.height, b.r});
  bool ok_b = true;
  double chain = 0.0;
  CompensatedSum total;
  for (auto& b : w.blocks) {
    const double nun = nu(b.n);
    b.ratio = pvariation_pulse_train(w.train, p, b.n) / nun;
    b.selection_ratio = std::pow(static_cast<double>(2 * b.r - 1), ip) * b.height / nun;
    b.selection_floor =
        std::pow(2.0, (-b.k * p - b.k - 1.0) / p) * std::pow(static_cast<double>(b.m), ip) *
        Phi.partial_inverse(b.m, 1.0) / nun;
    const double goal = std::ldexp(1.0, b.k);
    ok_b = ok_b && approx_le(b.selection_floor, b.selection_ratio) &&
           approx_le(b.selection_ratio, b.ratio) && b.selection_floor >= goal * (1.0 - kTolerance);
    total.add(b.var_term);
    chain += 2.0 * Phi.partial(b.m, b.height);
  }
  w.var_phi_bound = total.value();
  w.var_phi_chain = chain;
  w.certificate_a = approx_le(w.var_phi_bound, w.var_phi_chain) && approx_le(w.var_phi_chain, 2.0);
  w.certificate_b = ok_b;
  require(w.certificate_a && w.certificate_b, ErrorCode::Numeric,
          "witness: certificate check failed");

  // Samples: x = 0, then blocks from k_max down to 1 (increasing x), then x = 1.
  std::size_t points = 2;
  for (const auto& b : w.blocks) points += 4 * static_cast<std::size_t>(b.r) - 1;
  if (points <= opt.materialize_limit) {
    std::vector<double> xs{0.0}, ys{0.0};
    for (auto it = w.blocks.rbegin(); it != w.blocks.rend(); ++it) {
      const double start = std::ldexp(1.0, -it->k);
      const double half = 0.5 / static_cast<double>(it->n);
      // endpoints and midpoints of the pulses and of the gaps between them
      for (std::int64_t j = 0; j + 1 < 4 * it->r; ++j) {
        xs.push_back(start + static_cast<double>(j) * half);
        ys.push_back((j & 2) == 0 ? it->height : 0.0);
      }
    }
    xs.push_back(1.0);
    ys.push_back(0.0);
    w.function.emplace(std::move(xs), std::move(ys));
    const auto L = static_cast<std::int64_t>(points);
    std::int64_t nmax = 1;
    for (const auto& b : w.blocks) nmax = std::max(nmax, std::min(b.n, L));
    const auto prof = pvariation_profile(*w.function, p, nmax);
    for (const auto& b : w.blocks) {
      const double dp = prof[static_cast<std::size_t>(std::min(b.n, nmax) - 1)] / nu(b.n);
      w.dp_ratios.push_back(dp);
      require(approx_eq(dp, b.ratio, 1e-9), ErrorCode::Numeric,
              "witness: dynamic programme disagrees with the pulse-train value");
    }
  }
  return w;
}

}  // namespace pvarlab
