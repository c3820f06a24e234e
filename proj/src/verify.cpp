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


#include "pvarlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "pvarlab/embeddings.hpp"
#include "pvarlab/error.hpp"
#include "pvarlab/fourier.hpp"
#include "pvarlab/kfunctional.hpp"
#include "pvarlab/parallel.hpp"
#include "pvarlab/random.hpp"
#include "pvarlab/seqspaces.hpp"
#include "pvarlab/tolerance.hpp"
#include "pvarlab/variation.hpp"

namespace pvarlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPs[] = {1.0, 1.5, 2.0, 3.0};

std::vector<double> shaped(Random& rng, std::size_t n) {
  std::vector<double> v(n);
  const auto mode = rng.integer(0, 3);
  for (std::size_t i = 0; i < n; ++i) {
    switch (mode) {
      case 0: v[i] = rng.uniform(-1.0, 1.0); break;
      case 1: v[i] = static_cast<double>(rng.integer(-2, 2)); break;
      case 2: v[i] = (i == 0 ? 0.0 : v[i - 1]) + rng.uniform(-0.2, 1.0); break;
      default: v[i] = std::sin(3.0 * static_cast<double>(i)) + rng.uniform(-0.1, 0.1); break;
    }
  }
  return v;
}

// Keeps the first failure for the detail column.
struct Tally {
  CheckResult r;
  explicit Tally(std::string name) { r.name = std::move(name); }
  void check(bool ok, const std::function<std::string()>& what) {
    ++r.cases;
    if (ok) return;
    if (r.violations++ == 0) r.detail = "first violation: " + what();
  }
  CheckResult done(const std::string& ok_detail = {}) {
    if (r.violations == 0 && r.detail.empty()) r.detail = ok_detail;
    return r;
  }
};

std::string num(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

CheckResult check_dp_oracle(std::uint64_t seed, int functions, int max_points, int max_n,
                            double tol) {
  Random rng(seed);
  Tally t("dp-oracle");
  double worst = 0.0;
  for (int i = 0; i < functions; ++i) {
    const auto L = static_cast<std::size_t>(rng.integer(2, max_points));
    const auto f = SampledFunction::uniform(0.0, 1.0, shaped(rng, L));
    const double p = kPs[i % 4];
    for (int n = 1; n <= max_n; ++n) {
      const double a = pvariation_dp(f, p, n).value;
      const double b = pvariation_bruteforce(f, p, n).value;
      const double d = std::fabs(a - b) / std::max(1.0, std::fabs(b));
      worst = std::max(worst, d);
      t.check(d <= tol, [&] { return "L=" + std::to_string(L) + " n=" + std::to_string(n) + " dp=" + num(a) + " brute=" + num(b); });
    }
  }
  return t.done("max relative gap " + num(worst));
}

CheckResult check_holder_chain(std::uint64_t seed, int functions, int max_points, int max_n) {
  Random rng(seed);
  Tally t("holder-chain");
  for (int i = 0; i < functions; ++i) {
    const auto L = static_cast<std::size_t>(rng.integer(2, max_points));
    const auto f = SampledFunction::uniform(0.0, 1.0, shaped(rng, L));
    const double p = kPs[i % 4];
    for (int n = 1; n <= max_n; ++n) {
      const double vp = pvariation_dp(f, p, n).value;
      const double v1 = pvariation_dp(f, 1.0, n).value;
      const double cap = vp * std::pow(static_cast<double>(n), 1.0 - 1.0 / p);
      t.check(approx_le(vp, v1) && approx_le(v1, cap),
              [&] { return "n=" + std::to_string(n) + " vp=" + num(vp) + " v1=" + num(v1); });
    }
  }
  return t.done();
}

KSandwichCounts check_kfunctional(std::uint64_t seed, int functions, int competitors) {
  Random rng(seed);
  KSandwichCounts out;
  Tally cons("k-construction"), up5("k-upper-5x"), lit("k-lower-le-upper"), two("k-factor-two"),
      clit("k-competitors"), ctwo("k-competitors-factor-two");
  const double ts[] = {1.0, 0.75, 0.5, 0.3, 0.2, 0.1, 0.05, 0.02};
  double worst_ratio = 0.0, worst_gap = 1.0;
  for (int i = 0; i < functions; ++i) {
    const auto L = static_cast<std::size_t>(rng.integer(3, 40));
    const auto f = SampledFunction::uniform(0.0, 1.0, shaped(rng, L));
    const double p = kPs[i % 4];
    for (double tt : ts) {
      std::optional<KSandwich> s;
      try {
        s = kfunctional_bounds(f, tt, p);
      } catch (const Error& e) {
        cons.check(false, [&] { return std::string(e.what()); });
        continue;
      }
      const double tau2 = 2.0 * s->upsilon / std::pow(static_cast<double>(s->M), 1.0 / p);
      cons.check(approx_le(s->var_g, s->upsilon, 1e-9) && approx_le(s->sup_error, tau2, 1e-9),
                 [&] { return "t=" + num(tt) + " var_g=" + num(s->var_g) + " sup=" + num(s->sup_error); });
      if (s->lower > 0.0) {
        worst_ratio = std::max(worst_ratio, s->ratio);
        up5.check(approx_le(s->upper, 5.0 * s->lower, 1e-9), [&] { return "ratio " + num(s->ratio); });
      }
      if (s->lower > 0.0) worst_gap = std::min(worst_gap, s->upper / s->lower);
      lit.check(approx_le(s->lower, s->upper, 1e-9),
                [&] { return "t=" + num(tt) + " p=" + num(p) + " lower=" + num(s->lower) + " upper=" + num(s->upper); });
      two.check(approx_le(s->lower, 2.0 * s->sup_error + tt * s->var_g, 1e-9),
                [&] { return "t=" + num(tt) + " lower=" + num(s->lower); });
    }
    // random piecewise-linear competitors at one t per function
    const double tt = ts[i % 8];
    const double lower = tt * pvariation_value(f.values(), p, kfunctional_M(tt, p));
    for (int c = 0; c < competitors; ++c) {
      std::vector<double> knots{f.front()};
      for (std::size_t k = 1; k + 1 < f.size(); ++k)
        if (rng.coin()) knots.push_back(f.grid()[k]);
      knots.push_back(f.back());
      std::vector<double> vals;
      const double jitter = rng.uniform(0.0, 0.5);
      for (double x : knots) vals.push_back(f(x) + rng.uniform(-jitter, jitter));
      const PLFunction g(knots, vals);
      const double d = sup_distance(f, g), v = varp_pl(g, p);
      clit.check(approx_le(lower, d + tt * v, 1e-9), [&] { return "lower=" + num(lower) + " competitor=" + num(d + tt * v); });
      ctwo.check(approx_le(lower, 2.0 * d + tt * v, 1e-9), [&] { return "lower=" + num(lower); });
    }
  }
  out.construction = cons.done();
  out.upper_factor = up5.done("max upper/lower " + num(worst_ratio));
  out.literal = lit.done("min upper/lower " + num(worst_gap));
  out.factor_two = two.done();
  out.competitors_literal = clit.done();
  out.competitors_factor_two = ctwo.done();
  return out;
}

CheckResult check_lemma_q(std::int64_t k_max) {
  Tally t("lemma-q");
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const double lo = 1.0 - 1.0 / p, hi = std::pow(2.0, -1.0 / p);
    double prev = INFINITY;
    std::int64_t bad = 0, first = 0;
    for (std::int64_t k = 1; k <= k_max; ++k) {
      const double q = lemma_q(k, p);
      if (q < lo - 1e-15 || q > hi + 1e-15 || q > prev + 1e-15) {
        if (bad++ == 0) first = k;
      }
      prev = q;
    }
    // one case per p keeps the count readable
    t.check(bad == 0, [&] { return "p=" + num(p) + " k=" + std::to_string(first); });
  }
  auto r = t.done("k <= " + std::to_string(k_max));
  r.cases = 4 * k_max;
  return r;
}

CheckResult check_sine_integral(int cases) {
  Tally t("sine-integral");
  int branch1 = 0, branch2 = 0;
  for (int i = 0; i < cases; ++i) {
    const std::int64_t a = 1 + (i * 7) % 23;
    // alternate the two cases 2a < b and a < b <= 2a
    const std::int64_t b = (i % 2 == 0) ? 2 * a + 1 + (i * 5) % 40 : a + 1 + (i * 3) % a;
    const std::int64_t n = 1 + (i * 11) % 50;
    (2 * a < b ? branch1 : branch2)++;
    const auto [lhs, rhs] = sine_integral_lower(a, b, n);
    t.check(lhs >= rhs, [&] { return "a=" + std::to_string(a) + " b=" + std::to_string(b); });
  }
  return t.done("branch 2a<b: " + std::to_string(branch1) + ", branch 2a>=b: " + std::to_string(branch2));
}

CheckResult check_theta_bracket(std::int64_t n_max) {
  struct Family {
    ModulusOfContinuity w;
    ModulusOfVariation nu;
    double p;
  };
  const std::vector<Family> fams{
      {ModulusOfContinuity::power(0.5), ModulusOfVariation::power(0.25), 2.0},
      {ModulusOfContinuity::power(1.0 / 3.0, 0.5), ModulusOfVariation::log(), 1.0},
      {ModulusOfContinuity::inverse_log(0.5), ModulusOfVariation::power(0.125), 2.0},
      {ModulusOfContinuity::power(1.0), ModulusOfVariation::power(0.5), 1.0},
      {ModulusOfContinuity::inverse_log(1.0), ModulusOfVariation::log(), 1.0},
      {ModulusOfContinuity::power(0.25, 0.8), ModulusOfVariation::power(0.25), 3.0}};
  Tally t("theta-bracket");
  for (std::size_t fi = 0; fi < fams.size(); ++fi) {
    const auto& F = fams[fi];
    auto ratio = [&](std::int64_t k) { return F.nu(k) / std::pow(static_cast<double>(k), 1.0 / F.p); };
    for (std::int64_t n = 2; n <= n_max; ++n) {
      const auto th = theta(F.nu, F.w, F.p, n);
      const double w = F.w(1.0 / static_cast<double>(n));
      bool ok;
      if (th < n - 1)
        ok = approx_le(ratio(th + 1), w, 1e-12) && approx_le(w, ratio(th), 1e-12);
      else
        ok = approx_le(w, ratio(th), 1e-12);
      t.check(ok, [&] { return "family " + std::to_string(fi + 1) + " n=" + std::to_string(n) + " theta=" + std::to_string(th); });
    }
  }
  return t.done("6 families");
}

CheckResult check_unif2(std::int64_t horizon) {
  Tally t("unif2");
  const std::vector<std::pair<ModulusOfVariation, std::string>> nus{
      {ModulusOfVariation::power(0.125), "k^1/8"},
      {ModulusOfVariation::power(0.25), "k^1/4"},
      {ModulusOfVariation::power(0.5), "k^1/2"},
      {ModulusOfVariation::log(), "log"}};
  for (const auto& [nu, label] : nus) {
    for (double p : {1.0, 2.0}) {
      const auto r = unif2_verdicts(nu, p, horizon);
      t.check(r.agree, [&, lab = label] {
        std::string s = lab + " p=" + num(p) + ":";
        for (const auto& x : r.series) s += std::string(" ") + to_string(x.verdict);
        return s;
      });
      // the series checkpoints; at h = 10 the log, p = 2 pair has lower > upper
      for (std::int64_t h : {horizon / 4, horizon / 2, horizon}) {
        const auto [lo, hi] = dual_harmonic_estimate(nu, p, h);
        t.check(approx_le(lo, hi), [&, lab = label] { return "dual sandwich " + lab + " h=" + std::to_string(h); });
      }
    }
  }
  return t.done("horizon " + std::to_string(horizon));
}

CheckResult check_fejer_integral(int n_max) {
  Tally t("fejer-integral");
  double worst = 0.0;
  for (int n = 0; n <= n_max; ++n) {
    const double d = std::fabs(fejer_kernel_integral(n) - kPi);
    worst = std::max(worst, d);
    t.check(d <= 1e-8, [&] { return "n=" + std::to_string(n) + " gap " + num(d); });
  }
  return t.done("max |gap| " + num(worst));
}

CheckResult check_fejer_contraction() {
  Tally t("fejer-contraction");
  const std::size_t L = 256;
  auto sample = [&](auto fn) {
    std::vector<double> g(L), v(L);
    for (std::size_t i = 0; i < L; ++i) {
      g[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(L);
      v[i] = fn(g[i]);
    }
    return SampledFunction::periodic(std::move(g), std::move(v), 2.0 * kPi);
  };
  const std::vector<std::pair<std::string, SampledFunction>> fs{
      {"cos", sample([](double x) { return std::cos(x); })},
      {"triangle", sample([](double x) { return std::fabs(x - kPi); })},
      {"trig", sample([](double x) { return std::sin(x) + 0.5 * std::cos(3 * x) + 0.25 * std::sin(7 * x); })},
      {"zigzag", sample([](double x) { return std::asin(std::sin(5 * x)); })},
      {"bump", sample([](double x) { return std::exp(-4.0 * (x - kPi) * (x - kPi)); })}};
  double worst = 0.0;
  for (const auto& [name, f] : fs) {
    for (const auto& [nu, p] : {std::pair{ModulusOfVariation::log(), 1.0},
                                std::pair{ModulusOfVariation::power(0.25), 2.0}}) {
      for (int n : {2, 8, 32, 100}) {
        const auto c = fejer_contraction(f, nu, p, n, 64);
        worst = std::max(worst, c.mean / c.original);
        t.check(c.mean <= 1.05 * c.original,
                [&, nm = name] { return nm + " n=" + std::to_string(n) + " ratio " + num(c.mean / c.original); });
      }
    }
  }
  return t.done("max ratio " + num(worst));
}

CheckResult check_corollaries(std::int64_t horizon) {
  Tally t("corollaries");
  const auto nu = ModulusOfVariation::log();
  CorollaryParams bvq;
  bvq.q = 2.0;
  CorollaryParams salem;
  salem.phi = OrliczFunction::exp_minus_one();
  CorollaryParams lam;
  lam.lambda = LambdaSequence::power(1.0);
  CorollaryParams ws;
  ws.q = 2.0;
  ws.lambda = LambdaSequence::power(0.5);
  CorollaryParams pl;
  pl.phi = OrliczFunction::power(3.0);
  pl.lambda = LambdaSequence::table({1.0, 2.0, 2.0, 5.0});
  const std::vector<std::pair<CorollaryCase, CorollaryParams>> cases{
      {CorollaryCase::BVq, bvq},
      {CorollaryCase::Salem, salem},
      {CorollaryCase::LambdaBV, lam},
      {CorollaryCase::WatermanShiba, ws},
      {CorollaryCase::PhiLambda, pl}};
  for (const auto& [c, prm] : cases) {
    for (double p : {1.0, 2.0}) {
      const auto r = corollary_criteria(c, prm, nu, p, horizon);
      t.check(r.consistent, [&, cc = c] { return std::string(to_string(cc)) + " max diff " + num(r.max_abs_diff); });
    }
  }
  const auto bv2 = PhiSequence::power_all(2.0);
  const auto e = embedding_criterion(bv2, ModulusOfVariation::power(0.5), 1.0, horizon);
  bool ones = true;
  for (double x : e.trace) ones = ones && std::fabs(x - 1.0) <= 1e-10;
  t.check(e.verdict == CriterionVerdict::Embeds && ones, [] { return std::string("BV_2 vs sqrt(n) should embed with trace 1"); });
  const auto f = embedding_criterion(bv2, nu, 1.0, horizon);
  t.check(f.verdict == CriterionVerdict::Fails, [] { return std::string("BV_2 vs log should fail"); });
  return t.done("5 cases x p in {1, 2}");
}

CheckResult check_wu(std::uint64_t seed, int per_kind) {
  Random rng(seed);
  Tally t("wu-lemma");
  const std::vector<PhiSequence> kinds{
      PhiSequence::power_all(2.0),
      PhiSequence::orlicz_all(OrliczFunction::exp_minus_one()),
      PhiSequence::orlicz_over_lambda(OrliczFunction::power(1.5), LambdaSequence::power(0.5)),
      PhiSequence::custom({OrliczFunction::exp_minus_one(), OrliczFunction::power(2.0, 0.5),
                           OrliczFunction::power(2.0, 0.25)})};
  double worst = 0.0;
  for (const auto& Phi : kinds) {
    for (int i = 0; i < per_kind; ++i) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 60));
      auto x = rng.values(n, 0.0, rng.uniform(0.01, 3.0));
      std::sort(x.begin(), x.end(), std::greater<>());
      CompensatedSum used;
      for (std::size_t j = 0; j < n; ++j) used.add(Phi.phi(static_cast<std::int64_t>(j) + 1, x[j]));
      const double budget = std::max(used.value() * rng.uniform(1.0, 2.0), 1e-300);
      const double p = rng.uniform(1.0, 4.0);
      const auto w = wu_bound_check(Phi, x, p, budget);
      if (w.rhs > 0.0) worst = std::max(worst, w.lhs / w.rhs);
      t.check(w.holds, [&] { return Phi.describe() + " lhs=" + num(w.lhs) + " rhs=" + num(w.rhs); });
    }
  }
  return t.done("max lhs/rhs " + num(worst));
}

CheckResult check_norms(std::uint64_t seed, int pairs) {
  Random rng(seed);
  Tally t("norm-battery");
  const std::vector<SequenceSpace> spaces{
      MarcinkiewiczSpace{ModulusOfVariation::power(0.5), 1.0},
      MarcinkiewiczSpace{ModulusOfVariation::log(), 1.0},
      LorentzSpace{LorentzWeight::power(0.5), 2.0},
      OrliczSpace{OrliczFunction::power(3.0)},
      OrliczSpace{OrliczFunction::exp_minus_one()},
      ModularSpace{PhiSequence::orlicz_over_lambda(OrliczFunction::power(2.0), LambdaSequence::power(1.0))}};
  for (const auto& sp : spaces) {
    for (int i = 0; i < pairs; ++i) {
      const auto n = static_cast<std::size_t>(rng.integer(1, 30));
      auto x = rng.values(n, -2.0, 2.0), y = rng.values(n, -2.0, 2.0);
      for (auto& v : x)
        if (rng.integer(0, 3) == 0) v = 0.0;
      const double nx = sequence_norm(sp, x), ny = sequence_norm(sp, y);
      auto perm = x;
      std::reverse(perm.begin(), perm.end());
      for (auto& v : perm) v = -v;
      auto smaller = x;
      for (auto& v : smaller) v *= rng.uniform(0.0, 1.0);
      std::vector<double> sum(n);
      for (std::size_t j = 0; j < n; ++j) sum[j] = x[j] + y[j];
      const double np = sequence_norm(sp, perm), ns = sequence_norm(sp, smaller), nsum = sequence_norm(sp, sum);
      t.check(approx_eq(np, nx, 1e-12), [&] { return describe(sp) + " symmetry"; });
      t.check(approx_le(ns, nx, 1e-10), [&] { return describe(sp) + " monotonicity"; });
      t.check(approx_le(nsum, nx + ny, 1e-10), [&] { return describe(sp) + " triangle"; });
    }
  }
  return t.done(std::to_string(spaces.size()) + " spaces");
}

CheckResult check_fundamental(std::int64_t n_max) {
  Tally t("fundamental-sequence");
  const std::vector<std::pair<ModulusOfVariation, double>> cases{
      {ModulusOfVariation::power(0.5), 1.0},
      {ModulusOfVariation::log(), 1.0},
      {ModulusOfVariation::power(0.25), 2.0},
      {ModulusOfVariation::power(0.2), 3.0}};
  for (const auto& [nu, p] : cases) {
    const SequenceSpace sp = MarcinkiewiczSpace{nu, p};
    for (std::int64_t n = 1; n <= n_max; ++n) {
      const double v = fundamental_sequence(sp, n);
      const double formula = (p == 1.0 ? static_cast<double>(n) : std::pow(static_cast<double>(n), 1.0 / p)) / nu(n);
      t.check(v == formula, [&] { return nu.describe() + " n=" + std::to_string(n) + " " + num(v) + " vs " + num(formula); });
    }
  }
  return t.done("exact equality");
}

CheckResult check_coeff_decay() {
  Tally t("coefficient-decay");
  const std::size_t L = 1024;
  std::vector<double> g(L), v(L);
  for (std::size_t i = 0; i < L; ++i) {
    g[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(L);
    v[i] = (i == 0 || 2 * i == L) ? 0.0 : (2 * i < L ? 1.0 : -1.0);
  }
  const auto f = SampledFunction::periodic(std::move(g), std::move(v), 2.0 * kPi);
  const auto r = coeff_decay_report(f, ModulusOfVariation::log(), 1.0, 256);
  t.check(std::isfinite(r.sup), [&] { return "sup " + num(r.sup); });
  return t.done("sup " + num(r.sup));
}

CheckResult check_var_phi(std::uint64_t seed, int cases) {
  Random rng(seed);
  Tally t("var-phi-specialisation");
  for (int i = 0; i < cases; ++i) {
    const auto L = static_cast<std::size_t>(rng.integer(2, 9));
    const auto f = SampledFunction::uniform(0.0, 1.0, shaped(rng, L));
    const double p = rng.uniform(1.0, 3.0);
    const auto swings = static_cast<int>(extrema_indices(f.values()).size()) - 1;
    const double vp = swings > 0 ? pvariation_dp(f, p, swings).value : 0.0;
    const double got = var_phi(f, PhiSequence::power_all(p)).value;
    t.check(approx_eq(got, std::pow(vp, p), 1e-10), [&] { return num(got) + " vs " + num(std::pow(vp, p)); });
  }
  return t.done();
}

CheckResult check_witness(int k_max) {
  Tally t("witness");
  const auto w = witness_generate(PhiSequence::power_all(2.0), ModulusOfVariation::log(), 1.0, k_max);
  t.check(w.has_value(), [] { return std::string("no witness within the search budget"); });
  if (!w) return t.done();
  t.check(w->certificate_a && w->var_phi_bound <= 2.0, [&] { return "Var_Phi bound " + num(w->var_phi_bound); });
  std::string ratios;
  for (const auto& b : w->blocks) {
    t.check(b.ratio >= std::ldexp(1.0, b.k), [&] { return "k=" + std::to_string(b.k) + " ratio " + num(b.ratio); });
    ratios += (ratios.empty() ? "" : " ") + num(b.ratio);
  }
  return t.done("ratios " + ratios + "; Var_Phi bound " + num(w->var_phi_bound));
}

std::vector<CheckResult> run_verify(std::uint64_t seed, unsigned jobs) {
  using Job = std::function<std::vector<CheckResult>()>;
  auto one = [](auto fn) { return Job([fn] { return std::vector<CheckResult>{fn()}; }); };
  const std::vector<Job> jobs_list{
      one([=] { return check_dp_oracle(seed, 120, 10, 4); }),
      one([=] { return check_holder_chain(seed + 1, 120, 10, 4); }),
      Job([=] {
        const auto k = check_kfunctional(seed + 2, 20, 40);
        return std::vector<CheckResult>{k.construction, k.upper_factor, k.factor_two, k.competitors_factor_two};
      }),
      one([] { return check_lemma_q(100000); }),
      one([] { return check_sine_integral(50); }),
      one([] { return check_theta_bracket(256); }),
      one([] { return check_unif2(10000); }),
      one([] { return check_fejer_integral(20); }),
      one([] { return check_fejer_contraction(); }),
      one([] { return check_corollaries(1024); }),
      one([=] { return check_wu(seed + 3, 50); }),
      one([=] { return check_norms(seed + 4, 40); }),
      one([] { return check_fundamental(1000); }),
      one([] { return check_coeff_decay(); }),
      one([=] { return check_var_phi(seed + 5, 60); }),
      one([] { return check_witness(2); })};
  const auto parts = parallel_map(jobs_list.size(), jobs, [&](std::size_t i) { return jobs_list[i](); });
  std::vector<CheckResult> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace pvarlab
