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


#include "pvarlab/report.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <sstream>

#include "pvarlab/embeddings.hpp"
#include "pvarlab/error.hpp"
#include "pvarlab/fourier.hpp"
#include "pvarlab/io.hpp"
#include "pvarlab/kfunctional.hpp"
#include "pvarlab/seqspaces.hpp"
#include "pvarlab/specs.hpp"
#include "pvarlab/variation.hpp"
#include "pvarlab/verify.hpp"

namespace pvarlab {

namespace {

using nlohmann::json;

constexpr unsigned kMaxJobs = 256;

// Reads typed parameters, collecting every problem instead of stopping.
class Params {
 public:
  Params(const json& j, std::vector<std::string>& errors) : j_(j), errors_(errors) {
    if (!j_.is_object()) errors_.push_back("parameters must be a JSON object");
  }

  bool has(const std::string& k) {
    used_.insert(k);
    return j_.is_object() && j_.contains(k) && !j_[k].is_null();
  }

  void error(const std::string& k, const std::string& msg) { errors_.push_back("--" + k + ": " + msg); }

  std::optional<double> real(const std::string& k) {
    if (!has(k)) return std::nullopt;
    const auto& v = j_[k];
    try {
      if (v.is_number()) return v.get<double>();
      if (v.is_string()) return parse_real(v.get<std::string>());
    } catch (const Error&) {
    }
    error(k, "expected a number");
    return std::nullopt;
  }

  std::optional<std::int64_t> integer(const std::string& k) {
    if (!has(k)) return std::nullopt;
    const auto& v = j_[k];
    try {
      if (v.is_number_integer()) return v.get<std::int64_t>();
      if (v.is_number()) {
        const double d = v.get<double>();
        if (d == std::floor(d) && std::fabs(d) < 9e15) return static_cast<std::int64_t>(d);
      }
      if (v.is_string()) return parse_integer(v.get<std::string>());
    } catch (const Error&) {
    }
    error(k, "expected an integer");
    return std::nullopt;
  }

  std::optional<std::string> text(const std::string& k) {
    if (!has(k)) return std::nullopt;
    const auto& v = j_[k];
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    if (v.is_array()) {
      // [a, b, c] reads as "a,b,c"
      std::string s;
      for (const auto& e : v) s += (s.empty() ? "" : ",") + (e.is_string() ? e.get<std::string>() : e.dump());
      return s;
    }
    error(k, "expected a string");
    return std::nullopt;
  }

  bool flag(const std::string& k) {
    if (!has(k)) return false;
    const auto& v = j_[k];
    if (v.is_boolean()) return v.get<bool>();
    if (v.is_string() && (v == "true" || v == "1")) return true;
    if (v.is_string() && (v == "false" || v == "0")) return false;
    error(k, "expected true or false");
    return false;
  }

  template <class T>
  std::optional<T> spec(const std::string& k, const std::function<T(std::string_view)>& parse) {
    const auto s = text(k);
    if (!s) return std::nullopt;
    try {
      return parse(*s);
    } catch (const Error& e) {
      error(k, e.what());
      return std::nullopt;
    }
  }

  // range helpers; they pass missing values through
  std::optional<double> real_in(const std::string& k, double lo, double hi, bool lo_open, bool hi_open,
                                const std::string& range) {
    auto v = real(k);
    if (v && !(std::isfinite(*v) && (lo_open ? *v > lo : *v >= lo) && (hi_open ? *v < hi : *v <= hi))) {
      error(k, "must lie in " + range + ", got " + format_number(*v));
      return std::nullopt;
    }
    return v;
  }
  std::optional<std::int64_t> int_in(const std::string& k, std::int64_t lo, std::int64_t hi) {
    auto v = integer(k);
    if (v && (*v < lo || *v > hi)) {
      error(k, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(*v));
      return std::nullopt;
    }
    return v;
  }

  void missing(const std::string& k) { error(k, "is required"); }

  void finish() {
    if (!j_.is_object()) return;
    for (const auto& [k, v] : j_.items())
      if (!used_.count(k)) errors_.push_back("--" + k + ": not a parameter of this subcommand");
  }

 private:
  const json& j_;
  std::vector<std::string>& errors_;
  std::set<std::string> used_;
};

std::optional<double> exponent(Params& P, const std::string& k = "p", bool required = true) {
  auto v = P.real_in(k, 1.0, INFINITY, false, true, "[1, inf)");
  if (!v && required && !P.has(k)) P.missing(k);
  return v;
}

unsigned jobs_of(Params& P) {
  return static_cast<unsigned>(P.int_in("jobs", 1, kMaxJobs).value_or(1));
}

std::optional<SampledFunction> function_of(Params& P, bool required = true) {
  const auto seed = P.int_in("seed", 0, INT64_MAX);
  const bool hf = P.has("function"), hv = P.has("values");
  if (hf && hv) {
    P.error("function", "give either --function or --values, not both");
    return std::nullopt;
  }
  if (hv) return P.spec<SampledFunction>("values", [](std::string_view s) { return function_from_values(s); });
  if (hf)
    return P.spec<SampledFunction>("function", [&](std::string_view s) {
      return parse_function(s, static_cast<std::uint64_t>(seed.value_or(0)));
    });
  if (required) P.missing("function");
  return std::nullopt;
}

std::optional<ModulusOfVariation> nu_of(Params& P, bool required = true) {
  auto v = P.spec<ModulusOfVariation>("nu", parse_modulus);
  if (!v && required && !P.has("nu")) P.missing("nu");
  return v;
}

json selection_json(const SampledFunction& f, const IntervalSelection& sel) {
  json arr = json::array();
  for (const auto& iv : sel.intervals)
    arr.push_back({{"start", iv.start},
                   {"end", iv.end},
                   {"x_start", f.grid()[iv.start]},
                   {"x_end", f.grid()[iv.end]},
                   {"difference", iv.difference}});
  return arr;
}

// ---- pvar ------------------------------------------------------------------

struct PvarReq {
  std::optional<SampledFunction> f;
  double p = 1.0;
  std::optional<std::int64_t> n, n_max;
  std::optional<ModulusOfVariation> nu;
  std::string method = "dp";
};

std::optional<PvarReq> parse_pvar(Params& P) {
  PvarReq r;
  r.f = function_of(P);
  const auto p = exponent(P);
  r.n = P.int_in("n", 1, 1'000'000'000);
  r.n_max = P.int_in("n-max", 1, 1'000'000);
  if (P.has("n") && P.has("n-max")) P.error("n", "give either --n or --n-max, not both");
  if (!P.has("n") && !P.has("n-max")) P.missing("n");
  r.nu = nu_of(P, false);
  if (auto m = P.text("method")) {
    if (*m != "dp" && *m != "brute") P.error("method", "must be dp or brute");
    r.method = *m;
  }
  if (r.method == "brute" && r.n_max) P.error("method", "brute force computes a single n");
  if (r.method == "brute" && r.n && *r.n > kBruteforceMaxIntervals)
    P.error("n", "brute force accepts n <= " + std::to_string(kBruteforceMaxIntervals));
  if (r.method == "brute" && r.f && r.f->size() > kBruteforceMaxPoints)
    P.error("function", "brute force accepts at most " + std::to_string(kBruteforceMaxPoints) + " samples");
  if (!p || !r.f) return std::nullopt;
  r.p = *p;
  return r;
}

Output run_pvar(const PvarReq& r) {
  Output out;
  const auto& f = *r.f;
  out.json["p"] = r.p;
  out.json["samples"] = f.size();
  if (r.n) {
    if (*r.n > static_cast<std::int64_t>(INT32_MAX)) fail(ErrorCode::InvalidArgument, "--n: too large");
    const int n = static_cast<int>(*r.n);
    const auto res = r.method == "brute" ? pvariation_bruteforce(f, r.p, n) : pvariation_dp(f, r.p, n);
    out.json["n"] = *r.n;
    out.json["value"] = res.value;
    out.json["method"] = r.method;
    out.json["selection"] = selection_json(f, res.selection);
    out.table.header = {"n", "value"};
    out.table.rows.push_back({*r.n, res.value});
    if (r.nu) {
      const double ratio = res.value / (*r.nu)(*r.n);
      out.json["nu"] = r.nu->describe();
      out.json["ratio"] = ratio;
      out.table.header.push_back("ratio");
      out.table.rows.back().push_back(ratio);
    }
    return out;
  }
  const auto prof = pvariation_profile(f, r.p, *r.n_max);
  out.json["n_max"] = *r.n_max;
  out.json["profile"] = prof;
  out.table.header = {"n", "value"};
  if (r.nu) out.table.header.push_back("ratio");
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const auto n = static_cast<std::int64_t>(i) + 1;
    std::vector<Cell> row{n, prof[i]};
    if (r.nu) row.push_back(prof[i] / (*r.nu)(n));
    out.table.rows.push_back(std::move(row));
  }
  if (r.nu) {
    const auto v = vpnu_norm(f, *r.nu, r.p, *r.n_max);
    out.json["nu"] = r.nu->describe();
    out.json["vpnu"] = {{"variation", v.variation}, {"sup", v.sup}, {"norm", v.norm()}};
  }
  return out;
}

// ---- kfunc -----------------------------------------------------------------

struct KfuncReq {
  std::optional<SampledFunction> f;
  double p = 1.0;
  std::vector<double> t;
  unsigned jobs = 1;
};

std::optional<KfuncReq> parse_kfunc(Params& P) {
  KfuncReq r;
  r.f = function_of(P);
  const auto p = exponent(P);
  r.jobs = jobs_of(P);
  if (auto ts = P.spec<std::vector<double>>("t", parse_real_list)) {
    if (ts->empty()) P.error("t", "needs at least one value");
    for (double t : *ts)
      if (!(t > 0.0 && t <= 1.0)) P.error("t", "every t must lie in (0, 1], got " + format_number(t));
    r.t = *ts;
  } else if (!P.has("t")) {
    P.missing("t");
  }
  if (!p || !r.f) return std::nullopt;
  r.p = *p;
  return r;
}

Output run_kfunc(const KfuncReq& r) {
  Output out;
  const auto rows = kfunctional_sweep(*r.f, r.t, r.p, r.jobs);
  out.table.header = {"t", "M", "lower", "upper", "ratio", "case"};
  json arr = json::array();
  for (const auto& s : rows) {
    out.table.rows.push_back({s.t, s.M, s.lower, s.upper, s.ratio, std::string(to_string(s.knot_case))});
    arr.push_back({{"t", s.t},
                   {"M", s.M},
                   {"lower", s.lower},
                   {"upper", s.upper},
                   {"ratio", json_number(s.ratio)},
                   {"case", to_string(s.knot_case)},
                   {"upsilon", s.upsilon},
                   {"var_g", s.var_g},
                   {"sup_error", s.sup_error},
                   {"knots", s.knot_count}});
  }
  out.json["p"] = r.p;
  out.json["rows"] = arr;
  return out;
}

// ---- fourier ---------------------------------------------------------------

const std::set<std::string> kFourierReports{"sequences", "decay", "unif2", "coeffs", "partial",
                                            "fejer", "nikolskii", "contraction", "kernel"};

struct FourierReq {
  std::string report = "sequences";
  std::optional<SampledFunction> f;
  std::optional<ModulusOfVariation> nu;
  std::optional<ModulusOfContinuity> omega;
  double p = 1.0;
  std::int64_t n = 0, n_min = 2, n_max = 0, horizon = 0;
};

std::optional<FourierReq> parse_fourier(Params& P) {
  FourierReq r;
  if (auto rep = P.text("report")) {
    if (!kFourierReports.count(*rep)) P.error("report", "unknown fourier report '" + *rep + "'");
    r.report = *rep;
  }
  const auto& k = r.report;
  const bool needs_f = k == "decay" || k == "coeffs" || k == "partial" || k == "fejer" ||
                       k == "nikolskii" || k == "contraction";
  const bool needs_nu = k == "sequences" || k == "decay" || k == "unif2" || k == "nikolskii" || k == "contraction";
  const bool needs_p = needs_nu;
  const bool needs_omega = k == "sequences" || k == "nikolskii";
  if (needs_f) {
    r.f = function_of(P);
    if (r.f && !r.f->is_periodic()) P.error("function", "fourier reports need periodic samples");
  } else {
    P.int_in("seed", 0, INT64_MAX);
  }
  if (needs_nu) r.nu = nu_of(P);
  std::optional<double> p;
  if (needs_p) p = exponent(P);
  if (needs_omega) {
    if (auto s = P.text("omega")) {
      if (*s == "sampled") {
        if (k != "nikolskii") P.error("omega", "'sampled' needs a function (nikolskii report)");
        else if (r.f) r.omega = ModulusOfContinuity::sampled(*r.f);
      } else {
        try {
          r.omega = parse_omega(*s);
        } catch (const Error& e) {
          P.error("omega", e.what());
        }
      }
    } else {
      P.missing("omega");
    }
  }
  const auto n = P.int_in("n", 0, 1'000'000);
  const auto n_min = P.int_in("n-min", 2, 10'000'000);
  const auto n_max = P.int_in("n-max", 2, 10'000'000);
  const auto horizon = P.int_in("horizon", 16, 100'000'000);
  if (k == "sequences") {
    if (!n_max) P.missing("n-max");
    if (n_min && n_max && *n_min > *n_max) P.error("n-min", "must not exceed --n-max");
  }
  if (k == "contraction" && !P.has("n-max")) P.missing("n-max");
  if (k == "unif2" && !horizon) P.missing("horizon");
  if ((needs_f || k == "kernel") && !n) P.missing("n");
  if ((k == "nikolskii" || k == "contraction" || k == "decay") && n && *n < 1) P.error("n", "must be >= 1");
  if (k == "nikolskii" && n && *n < 2) P.error("n", "must be >= 2");
  if (p) r.p = *p;
  r.n = n.value_or(0);
  r.n_min = n_min.value_or(2);
  r.n_max = n_max.value_or(0);
  r.horizon = horizon.value_or(0);
  return r;
}

Output run_fourier(const FourierReq& r) {
  Output out;
  const auto& k = r.report;
  out.json["report"] = k;
  if (k == "sequences") {
    out.table.header = {"n", "theta", "rho", "sigma", "tau", "eta"};
    json arr = json::array();
    for (std::int64_t n = r.n_min; n <= r.n_max; ++n) {
      const auto s = convergence_sequences(*r.nu, *r.omega, r.p, n);
      out.table.rows.push_back({n, s.theta, s.rho, s.sigma, s.tau, s.eta});
      arr.push_back({{"n", n}, {"theta", s.theta}, {"rho", s.rho}, {"sigma", s.sigma}, {"tau", s.tau}, {"eta", s.eta}});
    }
    out.json["nu"] = r.nu->describe();
    out.json["omega"] = r.omega->describe();
    out.json["p"] = r.p;
    out.json["rows"] = arr;
  } else if (k == "decay") {
    const auto d = coeff_decay_report(*r.f, *r.nu, r.p, static_cast<int>(r.n));
    out.table.header = {"n", "coeff_ratio"};
    for (std::size_t i = 0; i < d.ratios.size(); ++i)
      out.table.rows.push_back({static_cast<std::int64_t>(i) + 1, d.ratios[i]});
    out.json["sup"] = json_number(d.sup);
    out.json["ratios"] = d.ratios;
  } else if (k == "unif2") {
    const auto u = unif2_verdicts(*r.nu, r.p, r.horizon);
    out.table.header = {"series", "partial_quarter", "partial_half", "partial", "numeric", "closed_form", "verdict"};
    json arr = json::array();
    for (const auto& s : u.series) {
      const std::string cf = s.closed_form ? to_string(*s.closed_form) : "n/a";
      out.table.rows.push_back({s.name, s.partial_quarter, s.partial_half, s.partial,
                                std::string(to_string(s.numeric)), cf, std::string(to_string(s.verdict))});
      arr.push_back({{"name", s.name},
                     {"partial_quarter", s.partial_quarter},
                     {"partial_half", s.partial_half},
                     {"partial", s.partial},
                     {"numeric", to_string(s.numeric)},
                     {"closed_form", s.closed_form ? json(to_string(*s.closed_form)) : json(nullptr)},
                     {"verdict", to_string(s.verdict)}});
    }
    out.json["horizon"] = u.horizon;
    out.json["series"] = arr;
    out.json["agree"] = u.agree;
  } else if (k == "coeffs") {
    const auto c = fourier_coeffs(*r.f, static_cast<int>(r.n));
    out.table.header = {"k", "a", "b", "magnitude"};
    out.table.rows.push_back({std::int64_t{0}, c.a0, 0.0, std::fabs(c.a0) / 2.0});
    for (int i = 1; i <= c.N(); ++i)
      out.table.rows.push_back({std::int64_t{i}, c.a[i - 1], c.b[i - 1], c.magnitude(i)});
    out.json["a0"] = c.a0;
    out.json["a"] = c.a;
    out.json["b"] = c.b;
    out.json["period"] = c.period;
  } else if (k == "partial" || k == "fejer") {
    const auto c = fourier_coeffs(*r.f, static_cast<int>(r.n));
    const auto y = k == "partial" ? partial_sum(c, static_cast<int>(r.n), r.f->grid())
                                  : fejer_mean(c, static_cast<int>(r.n), r.f->grid());
    out.table.header = {"x", "y"};
    for (std::size_t i = 0; i < y.size(); ++i) out.table.rows.push_back({r.f->grid()[i], y[i]});
    out.json["n"] = r.n;
    out.json["x"] = std::vector<double>(r.f->grid().begin(), r.f->grid().end());
    out.json["y"] = y;
  } else if (k == "nikolskii") {
    const auto c = nikolskii_bound_check(*r.f, *r.nu, *r.omega, r.p, static_cast<int>(r.n));
    out.table.header = {"n", "error", "bound"};
    out.table.rows.push_back({r.n, c.error, c.bound});
    out.json["n"] = r.n;
    out.json["error"] = c.error;
    out.json["bound"] = c.bound;
  } else if (k == "contraction") {
    const auto c = fejer_contraction(*r.f, *r.nu, r.p, static_cast<int>(r.n), r.n_max);
    out.table.header = {"n", "original", "mean"};
    out.table.rows.push_back({r.n, c.original, c.mean});
    out.json["n"] = r.n;
    out.json["original"] = c.original;
    out.json["mean"] = c.mean;
  } else {  // kernel
    out.table.header = {"n", "integral"};
    json arr = json::array();
    for (std::int64_t n = 0; n <= r.n; ++n) {
      const double v = fejer_kernel_integral(static_cast<int>(n));
      out.table.rows.push_back({n, v});
      arr.push_back(v);
    }
    out.json["integrals"] = arr;
  }
  return out;
}

// ---- embed -----------------------------------------------------------------

std::optional<CorollaryCase> corollary_from(const std::string& s) {
  for (auto c : {CorollaryCase::BVq, CorollaryCase::Salem, CorollaryCase::LambdaBV,
                 CorollaryCase::WatermanShiba, CorollaryCase::PhiLambda})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct EmbedReq {
  std::string report = "criterion";
  std::optional<PhiSequence> Phi;
  std::optional<ModulusOfVariation> nu;
  double p = 1.0;
  std::int64_t horizon = 4096;
  std::optional<CorollaryCase> corollary;
  CorollaryParams cp;
  CriterionParams thresholds;
  bool witness = false;
  int k_max = 3;
  WitnessOptions wopt;
  std::optional<SampledFunction> f;
  std::int64_t n_budget = 0;
  bool heuristic = false;
  std::vector<double> x;
  double budget = 1.0;
};

std::optional<EmbedReq> parse_embed(Params& P) {
  EmbedReq r;
  if (auto rep = P.text("report")) {
    if (*rep != "criterion" && *rep != "var-phi" && *rep != "wu")
      P.error("report", "must be criterion, var-phi or wu");
    r.report = *rep;
  }
  const auto q = P.real_in("q", 1.0, INFINITY, false, true, "[1, inf)");
  if (auto c = P.text("corollary")) {
    r.corollary = corollary_from(*c);
    if (!r.corollary) P.error("corollary", "must be bvq, salem, lambda, waterman-shiba or phi-lambda");
  }
  r.cp.q = q.value_or(1.0);
  r.cp.phi = P.spec<OrliczFunction>("orlicz", parse_orlicz);
  r.cp.lambda = P.spec<LambdaSequence>("lambda", parse_lambda);
  if (r.corollary) {
    if (P.has("phi")) P.error("phi", "the corollary determines the phi sequence");
    const auto c = *r.corollary;
    if ((c == CorollaryCase::BVq || c == CorollaryCase::WatermanShiba) && !q) P.missing("q");
    if ((c == CorollaryCase::Salem || c == CorollaryCase::PhiLambda) && !P.has("orlicz")) P.missing("orlicz");
    if ((c == CorollaryCase::LambdaBV || c == CorollaryCase::WatermanShiba || c == CorollaryCase::PhiLambda) &&
        !P.has("lambda"))
      P.missing("lambda");
    try {
      if (P.has("q") == !!q && (r.cp.phi || !P.has("orlicz")) && (r.cp.lambda || !P.has("lambda")))
        r.Phi = corollary_phi(c, r.cp);
    } catch (const Error& e) {
      P.error("corollary", e.what());
    }
  } else if (P.has("phi")) {
    if (P.has("q")) P.error("q", "give either --phi or --q, not both");
    r.Phi = P.spec<PhiSequence>("phi", parse_phi_sequence);
  } else if (q) {
    r.Phi = PhiSequence::power_all(*q);
  } else if (!P.has("q")) {
    P.missing("phi");
  }
  const bool criterion = r.report == "criterion";
  std::optional<double> p;
  if (criterion || r.report == "wu") p = exponent(P);
  if (criterion) {
    r.nu = nu_of(P);
    r.horizon = P.int_in("horizon", 8, 100'000'000).value_or(4096);
    r.thresholds.growth_factor = P.real_in("growth-factor", 1.0, INFINITY, true, true, "(1, inf)").value_or(10.0);
    r.thresholds.reference_fraction =
        P.real_in("reference-fraction", 0.0, 0.5, true, true, "(0, 0.5)").value_or(0.25);
    r.thresholds.fail_slope = P.real_in("fail-slope", 0.0, INFINITY, true, true, "(0, inf)").value_or(0.2);
    r.witness = P.flag("witness");
    r.k_max = static_cast<int>(P.int_in("k-max", 1, 5).value_or(3));
    r.wopt.search_budget = P.int_in("budget", 8, 1'000'000'000'000'000).value_or(r.wopt.search_budget);
    r.wopt.jobs = jobs_of(P);
    r.wopt.criterion = r.thresholds;
    if (r.witness && r.corollary) P.error("witness", "witness search takes --phi or --q, not --corollary");
  }
  if (r.report == "var-phi") {
    r.f = function_of(P);
    r.n_budget = P.int_in("n", 0, INT64_MAX).value_or(0);
    r.heuristic = P.flag("heuristic");
  }
  if (r.report == "wu") {
    if (auto x = P.spec<std::vector<double>>("values", parse_real_list)) r.x = *x;
    else if (!P.has("values")) P.missing("values");
    r.budget = P.real_in("budget", 0.0, INFINITY, true, true, "(0, inf)").value_or(0.0);
    if (!P.has("budget")) P.missing("budget");
  }
  if (p) r.p = *p;
  return r;
}

json criterion_json(const CriterionReport& c) {
  return {{"horizon", c.horizon}, {"trace", c.trace}, {"running_sup", c.running_sup}, {"verdict", to_string(c.verdict)}};
}

Output run_embed(const EmbedReq& r) {
  Output out;
  if (r.report == "var-phi") {
    const auto v = var_phi(*r.f, *r.Phi, r.n_budget, r.heuristic);
    out.json = {{"phi", r.Phi->describe()}, {"value", v.value}, {"exact", v.exact}};
    out.table.header = {"value", "exact"};
    out.table.rows.push_back({v.value, std::string(v.exact ? "true" : "false")});
    return out;
  }
  if (r.report == "wu") {
    const auto w = wu_bound_check(*r.Phi, r.x, r.p, r.budget);
    out.json = {{"phi", r.Phi->describe()}, {"lhs", w.lhs}, {"rhs", w.rhs}, {"holds", w.holds}};
    out.table.header = {"lhs", "rhs", "holds"};
    out.table.rows.push_back({w.lhs, w.rhs, std::string(w.holds ? "true" : "false")});
    return out;
  }
  CriterionReport crit;
  if (r.corollary) {
    const auto c = corollary_criteria(*r.corollary, r.cp, *r.nu, r.p, r.horizon, r.thresholds);
    crit = c.report;
    out.json = criterion_json(crit);
    out.json["corollary"] = to_string(*r.corollary);
    out.json["consistent"] = c.consistent;
    out.json["max_abs_diff"] = c.max_abs_diff;
  } else {
    crit = embedding_criterion(*r.Phi, *r.nu, r.p, r.horizon, r.thresholds);
    out.json = criterion_json(crit);
  }
  out.json["phi"] = r.Phi->describe();
  out.json["nu"] = r.nu->describe();
  out.json["p"] = r.p;
  out.table.header = {"n", "trace"};
  for (std::size_t i = 0; i < crit.trace.size(); ++i)
    out.table.rows.push_back({static_cast<std::int64_t>(i) + 1, crit.trace[i]});
  if (!r.witness) return out;

  auto opt = r.wopt;
  opt.precondition_horizon = r.horizon;
  const auto w = witness_generate(*r.Phi, *r.nu, r.p, r.k_max, opt);
  require(w.has_value(), ErrorCode::NotFound,
          "witness: no n_k satisfies the growth condition within the search budget");
  json blocks = json::array();
  out.table = Table{{"k", "n", "m", "r", "height", "criterion", "ratio", "selection_ratio", "var_term"}, {}};
  for (const auto& b : w->blocks) {
    blocks.push_back({{"k", b.k},
                      {"n", b.n},
                      {"m", b.m},
                      {"s", b.s},
                      {"r", b.r},
                      {"height", b.height},
                      {"criterion", b.criterion},
                      {"ratio", b.ratio},
                      {"selection_ratio", b.selection_ratio},
                      {"selection_floor", b.selection_floor},
                      {"var_term", b.var_term}});
    out.table.rows.push_back({std::int64_t{b.k}, b.n, b.m, b.r, b.height, b.criterion, b.ratio,
                              b.selection_ratio, b.var_term});
  }
  out.json["witness"] = {{"blocks", blocks},
                         {"certificates",
                          {{"a", w->certificate_a},
                           {"b", w->certificate_b},
                           {"var_phi_bound", w->var_phi_bound},
                           {"var_phi_chain", w->var_phi_chain},
                           {"dp_ratios", w->dp_ratios}}},
                         {"function", w->function ? function_to_json(*w->function) : json(nullptr)}};
  return out;
}

// ---- seqnorm ---------------------------------------------------------------

struct SeqReq {
  std::vector<double> x;
  std::optional<SequenceSpace> space;
  std::string kind;
  std::int64_t n_max = 0;
  std::int64_t horizon = 0;
};

std::optional<SeqReq> parse_seqnorm(Params& P) {
  SeqReq r;
  if (auto x = P.spec<std::vector<double>>("values", parse_real_list)) {
    if (x->empty()) P.error("values", "needs at least one entry");
    for (double v : *x)
      if (!std::isfinite(v)) P.error("values", "entries must be finite");
    r.x = *x;
  } else if (!P.has("values")) {
    P.missing("values");
  }
  const auto kind = P.text("space");
  if (!kind) P.missing("space");
  r.kind = kind.value_or("");
  if (r.kind == "marcinkiewicz") {
    const auto nu = nu_of(P);
    const auto p = exponent(P);
    if (nu && p) r.space = MarcinkiewiczSpace{*nu, *p};
  } else if (r.kind == "lorentz") {
    const auto w = P.spec<LorentzWeight>("weight", parse_weight);
    if (!P.has("weight")) P.missing("weight");
    const auto q = P.real_in("q", 1.0, INFINITY, false, true, "[1, inf)");
    if (!P.has("q")) P.missing("q");
    if (w && q) r.space = LorentzSpace{*w, *q};
  } else if (r.kind == "orlicz") {
    const auto phi = P.spec<OrliczFunction>("orlicz", parse_orlicz);
    if (!P.has("orlicz")) P.missing("orlicz");
    if (phi) r.space = OrliczSpace{*phi};
  } else if (r.kind == "modular") {
    const auto Phi = P.spec<PhiSequence>("phi", parse_phi_sequence);
    if (!P.has("phi")) P.missing("phi");
    if (Phi) r.space = ModularSpace{*Phi};
  } else if (kind) {
    P.error("space", "must be marcinkiewicz, lorentz, orlicz or modular");
  }
  r.n_max = P.int_in("n-max", 1, 10'000'000).value_or(static_cast<std::int64_t>(r.x.size()));
  r.horizon = P.int_in("horizon", 1, 100'000'000).value_or(0);
  if (r.horizon && r.kind != "marcinkiewicz") P.error("horizon", "the dual estimate needs a Marcinkiewicz space");
  return r;
}

Output run_seqnorm(const SeqReq& r) {
  Output out;
  const auto& sp = *r.space;
  const std::string params = describe(sp);
  const double norm = sequence_norm(sp, r.x);
  out.table.header = {"space", "params", "n_or_x_id", "value"};
  out.table.rows.push_back({r.kind, params, std::string("x"), norm});
  json fund = json::array();
  for (std::int64_t n = 1; n <= r.n_max; ++n) {
    const double v = fundamental_sequence(sp, n);
    out.table.rows.push_back({r.kind, params, n, v});
    fund.push_back(v);
  }
  out.json = {{"space", r.kind}, {"params", params}, {"norm", norm}, {"fundamental", fund}};
  if (r.horizon) {
    const auto& m = std::get<MarcinkiewiczSpace>(sp);
    const auto [lo, hi] = dual_harmonic_estimate(m.nu, m.p, r.horizon);
    out.json["dual"] = {{"horizon", r.horizon}, {"lower", lo}, {"upper", hi}};
  }
  return out;
}

// ---- verify ----------------------------------------------------------------

struct VerifyReq {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

std::optional<VerifyReq> parse_verify(Params& P) {
  VerifyReq r;
  const auto seed = P.int_in("seed", 0, INT64_MAX);
  if (!P.has("seed")) P.missing("seed");
  r.seed = static_cast<std::uint64_t>(seed.value_or(0));
  r.jobs = jobs_of(P);
  return r;
}

Output run_verify_report(const VerifyReq& r) {
  Output out;
  const auto checks = run_verify(r.seed, r.jobs);
  out.table.header = {"check", "status", "cases", "violations", "detail"};
  json arr = json::array();
  int failures = 0;
  for (const auto& c : checks) {
    const std::string status = c.passed() ? "pass" : "fail";
    failures += c.passed() ? 0 : 1;
    out.table.rows.push_back({c.name, status, c.cases, c.violations, c.detail});
    arr.push_back({{"check", c.name}, {"status", status}, {"cases", c.cases}, {"violations", c.violations}, {"detail", c.detail}});
  }
  out.json = {{"seed", r.seed}, {"checks", arr}, {"failures", failures}};
  out.status = failures ? 1 : 0;
  return out;
}

template <class Req>
struct Parsed {
  std::optional<Req> req;
  std::vector<std::string> errors;
};

template <class Req>
Parsed<Req> parse_with(const json& params, std::optional<Req> (*fn)(Params&)) {
  Parsed<Req> out;
  Params P(params, out.errors);
  out.req = fn(P);
  P.finish();
  return out;
}

[[noreturn]] void throw_errors(const std::vector<std::string>& errs) {
  std::string msg;
  for (const auto& e : errs) msg += (msg.empty() ? "" : "\n") + e;
  fail(ErrorCode::InvalidArgument, msg);
}

template <class Req, class Run>
Output parse_and_run(const json& params, std::optional<Req> (*fn)(Params&), Run run) {
  auto parsed = parse_with(params, fn);
  if (!parsed.errors.empty()) throw_errors(parsed.errors);
  require(parsed.req.has_value(), ErrorCode::InvalidArgument, "invalid parameters");
  return run(*parsed.req);
}

}  // namespace

bool is_subcommand(std::string_view name) {
  return name == "pvar" || name == "kfunc" || name == "fourier" || name == "embed" ||
         name == "seqnorm" || name == "verify";
}

std::vector<std::string> validate_params(std::string_view sub, const nlohmann::json& params) {
  if (sub == "pvar") return parse_with(params, parse_pvar).errors;
  if (sub == "kfunc") return parse_with(params, parse_kfunc).errors;
  if (sub == "fourier") return parse_with(params, parse_fourier).errors;
  if (sub == "embed") return parse_with(params, parse_embed).errors;
  if (sub == "seqnorm") return parse_with(params, parse_seqnorm).errors;
  if (sub == "verify") return parse_with(params, parse_verify).errors;
  return {"unknown subcommand '" + std::string(sub) + "'"};
}

Output run_report(std::string_view sub, const nlohmann::json& params) {
  if (sub == "pvar") return parse_and_run(params, parse_pvar, run_pvar);
  if (sub == "kfunc") return parse_and_run(params, parse_kfunc, run_kfunc);
  if (sub == "fourier") return parse_and_run(params, parse_fourier, run_fourier);
  if (sub == "embed") return parse_and_run(params, parse_embed, run_embed);
  if (sub == "seqnorm") return parse_and_run(params, parse_seqnorm, run_seqnorm);
  if (sub == "verify") return parse_and_run(params, parse_verify, run_verify_report);
  fail(ErrorCode::InvalidArgument, "unknown subcommand '" + std::string(sub) + "'");
}

std::string render(const Output& out, std::string_view format) {
  if (format == "csv") return to_csv(out.table);
  if (format == "json") return out.json.dump(2) + "\n";
  fail(ErrorCode::InvalidArgument, "--format: must be csv or json");
}

}  // namespace pvarlab
