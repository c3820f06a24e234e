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


#include "pvarlab/seqspaces.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "pvarlab/error.hpp"
#include "pvarlab/tolerance.hpp"

namespace pvarlab {

namespace {

void check_finite(std::span<const double> x) {
  for (double v : x)
    require(std::isfinite(v), ErrorCode::InvalidArgument, "sequence: entries must be finite");
}

void check_exponent(double p, const char* what) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument,
          std::string(what) + ": exponent must be a finite real >= 1");
}

double root(double s, double p) { return p == 1.0 ? s : std::pow(s, 1.0 / p); }

// inf{c > 0 : modular(c) <= 1} for a modular decreasing in c.
double gauge(const std::function<double(double)>& modular, double start) {
  double hi = start;
  for (int i = 0; modular(hi) > 1.0; ++i) {
    require(i < 2100, ErrorCode::Numeric, "norm: could not bracket the gauge");
    hi *= 2.0;
  }
  double lo = hi;
  for (int i = 0; modular(lo) <= 1.0; ++i) {
    require(i < 2100, ErrorCode::Numeric, "norm: could not bracket the gauge");
    lo *= 0.5;
  }
  for (int it = 0; it < 400 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (modular(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

std::size_t support(const std::vector<double>& xs) {
  std::size_t n = xs.size();
  while (n > 0 && xs[n - 1] == 0.0) --n;
  return n;
}

}  // namespace

std::vector<double> rearrange(std::span<const double> x) {
  check_finite(x);
  std::vector<double> out(x.size());
  std::transform(x.begin(), x.end(), out.begin(), [](double v) { return std::abs(v); });
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double marcinkiewicz_norm(std::span<const double> x, const ModulusOfVariation& nu, double p) {
  check_exponent(p, "marcinkiewicz_norm");
  const auto xs = rearrange(x);
  const std::size_t n = support(xs);
  CompensatedSum s;
  double best = 0.0;
  for (std::size_t j = 1; j <= n; ++j) {
    const double v = xs[j - 1];
    s.add(p == 1.0 ? v : std::pow(v, p));
    best = std::max(best, root(s.value(), p) / nu(static_cast<std::int64_t>(j)));
  }
  return best;
}

LorentzWeight LorentzWeight::power(double beta) {
  require(std::isfinite(beta) && beta >= 0.0 && beta <= 1.0, ErrorCode::InvalidArgument,
          "lorentz: weight exponent must lie in [0, 1] (nonincreasing, divergent sum)");
  return LorentzWeight(Kind::Power, beta, {});
}

LorentzWeight LorentzWeight::table(std::vector<double> values) {
  require(!values.empty(), ErrorCode::InvalidArgument, "lorentz: empty weight table");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]) && values[i] > 0.0, ErrorCode::InvalidArgument,
            "lorentz: weights must be positive and finite");
    if (i > 0)
      require(values[i] <= values[i - 1], ErrorCode::InvalidArgument,
              "lorentz: weights must be nonincreasing");
  }
  return LorentzWeight(Kind::Table, 0.0, std::move(values));
}

double LorentzWeight::operator()(std::int64_t j) const {
  require(j >= 1, ErrorCode::InvalidArgument, "lorentz: index must be >= 1");
  if (kind_ == Kind::Power) return beta_ == 0.0 ? 1.0 : std::pow(static_cast<double>(j), -beta_);
  require(j <= static_cast<std::int64_t>(values_.size()), ErrorCode::Domain,
          "lorentz: weight table too short for this sequence");
  return values_[static_cast<std::size_t>(j - 1)];
}

std::string LorentzWeight::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Power)
    os << "power:" << beta_;
  else
    os << "table[" << values_.size() << "]";
  return os.str();
}

double lorentz_norm(std::span<const double> x, const LorentzWeight& w, double q) {
  check_exponent(q, "lorentz_norm");
  const auto xs = rearrange(x);
  const std::size_t n = support(xs);
  CompensatedSum s;
  for (std::size_t j = 1; j <= n; ++j) {
    const double v = xs[j - 1];
    s.add((q == 1.0 ? v : std::pow(v, q)) * w(static_cast<std::int64_t>(j)));
  }
  return root(s.value(), q);
}

double orlicz_norm(std::span<const double> x, const OrliczFunction& phi) {
  const auto xs = rearrange(x);
  const std::size_t n = support(xs);
  if (n == 0) return 0.0;
  auto modular = [&](double c) {
    CompensatedSum s;
    for (std::size_t j = 0; j < n; ++j) s.add(phi(xs[j] / c));
    return s.value();
  };
  return gauge(modular, xs[0]);
}

double modular_norm(std::span<const double> x, const PhiSequence& Phi) {
  const auto xs = rearrange(x);
  const std::size_t n = support(xs);
  if (n == 0) return 0.0;
  auto modular = [&](double c) {
    CompensatedSum s;
    for (std::size_t j = 0; j < n; ++j) s.add(Phi.phi(static_cast<std::int64_t>(j + 1), xs[j] / c));
    return s.value();
  };
  return gauge(modular, xs[0]);
}

double sequence_norm(const SequenceSpace& space, std::span<const double> x) {
  struct Visitor {
    std::span<const double> x;
    double operator()(const MarcinkiewiczSpace& s) const { return marcinkiewicz_norm(x, s.nu, s.p); }
    double operator()(const LorentzSpace& s) const { return lorentz_norm(x, s.w, s.q); }
    double operator()(const OrliczSpace& s) const { return orlicz_norm(x, s.phi); }
    double operator()(const ModularSpace& s) const { return modular_norm(x, s.Phi); }
  };
  return std::visit(Visitor{x}, space);
}

std::string describe(const SequenceSpace& space) {
  struct Visitor {
    std::string operator()(const MarcinkiewiczSpace& s) const {
      std::ostringstream os;
      os << "marcinkiewicz(nu=" << s.nu.describe() << ";p=" << s.p << ")";
      return os.str();
    }
    std::string operator()(const LorentzSpace& s) const {
      std::ostringstream os;
      os << "lorentz(w=" << s.w.describe() << ";q=" << s.q << ")";
      return os.str();
    }
    std::string operator()(const OrliczSpace& s) const { return "orlicz(" + s.phi.describe() + ")"; }
    std::string operator()(const ModularSpace& s) const { return "modular(" + s.Phi.describe() + ")"; }
  };
  return std::visit(Visitor{}, space);
}

double fundamental_sequence(const SequenceSpace& space, std::int64_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "fundamental_sequence: n must be >= 1");
  const auto nd = static_cast<double>(n);
  if (const auto* m = std::get_if<MarcinkiewiczSpace>(&space)) {
    check_exponent(m->p, "fundamental_sequence");
    const double formula = root(nd, m->p) / m->nu(n);
    // sup_{k<=n} k^{1/p}/nu(k), the same expression the norm evaluates
    double sup = 0.0;
    bool monotone = true;
    double prev = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
      const double r = root(static_cast<double>(k), m->p) / m->nu(k);
      if (k > 1 && r < prev) monotone = false;
      sup = std::max(sup, r);
      prev = r;
    }
    if (monotone && sup != formula)
      fail(ErrorCode::Numeric, "fundamental_sequence: Marcinkiewicz value differs from n^(1/p)/nu(n)");
    return sup;
  }
  if (const auto* l = std::get_if<LorentzSpace>(&space)) {
    check_exponent(l->q, "fundamental_sequence");
    CompensatedSum s;
    for (std::int64_t j = 1; j <= n; ++j) s.add(l->w(j));
    return root(s.value(), l->q);
  }
  if (const auto* o = std::get_if<OrliczSpace>(&space)) return 1.0 / o->phi.inverse(1.0 / nd);
  const auto& mod = std::get<ModularSpace>(space);
  return 1.0 / mod.Phi.partial_inverse(n, 1.0);
}

std::pair<double, double> dual_harmonic_estimate(const ModulusOfVariation& nu, double p,
                                                 std::int64_t horizon) {
  check_exponent(p, "dual_harmonic_estimate");
  require(horizon >= 1, ErrorCode::InvalidArgument, "dual_harmonic_estimate: horizon must be >= 1");
  CompensatedSum lower, upper;
  for (std::int64_t k = 1; k <= horizon; ++k) {
    const auto kk = static_cast<double>(k);
    lower.add(epsilon_p(nu, p, k) / kk);
    upper.add(nu(k) / (root(kk, p) * kk));
  }
  return {lower.value(), upper.value()};
}

}  // namespace pvarlab
