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


#include "pvarlab/phi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pvarlab/error.hpp"
#include "pvarlab/tolerance.hpp"

namespace pvarlab {

OrliczFunction OrliczFunction::power(double q, double c) {
  require(std::isfinite(q) && q >= 1.0, ErrorCode::InvalidArgument,
          "orlicz: power exponent must be >= 1 (convexity)");
  require(std::isfinite(c) && c > 0.0, ErrorCode::InvalidArgument,
          "orlicz: coefficient must be positive");
  return OrliczFunction(Kind::Power, q, c);
}

OrliczFunction OrliczFunction::exp_minus_one() { return OrliczFunction(Kind::ExpMinusOne, 1.0, 1.0); }

double OrliczFunction::operator()(double x) const {
  require(x >= 0.0, ErrorCode::InvalidArgument, "orlicz: argument must be >= 0");
  if (kind_ == Kind::ExpMinusOne) return std::expm1(x);
  return c_ * (q_ == 1.0 ? x : std::pow(x, q_));
}

double OrliczFunction::inverse(double y) const {
  require(y >= 0.0, ErrorCode::InvalidArgument, "orlicz: inverse argument must be >= 0");
  if (kind_ == Kind::ExpMinusOne) return std::log1p(y);
  const double r = y / c_;
  return q_ == 1.0 ? r : std::pow(r, 1.0 / q_);
}

std::string OrliczFunction::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::ExpMinusOne)
    os << "exp";
  else
    os << "power:" << q_ << ":" << c_;
  return os.str();
}

namespace {

constexpr std::int64_t kLambdaPrefix = 1000;

}  // namespace

LambdaSequence::LambdaSequence(Kind kind, double beta, std::vector<double> values)
    : kind_(kind), beta_(beta), values_(std::move(values)) {
  const std::int64_t len =
      kind_ == Kind::Power ? kLambdaPrefix : static_cast<std::int64_t>(values_.size());
  prefix_.assign(static_cast<std::size_t>(len + 1), 0.0);
  CompensatedSum s;
  for (std::int64_t j = 1; j <= len; ++j) {
    s.add(1.0 / (*this)(j));
    prefix_[static_cast<std::size_t>(j)] = s.value();
  }
}

LambdaSequence LambdaSequence::power(double beta) {
  require(std::isfinite(beta) && beta >= 0.0, ErrorCode::InvalidArgument,
          "lambda: exponent must be >= 0");
  require(beta <= 1.0, ErrorCode::InvalidArgument,
          "lambda: j^beta with beta > 1 has summable reciprocals");
  return LambdaSequence(Kind::Power, beta, {});
}

LambdaSequence LambdaSequence::table(std::vector<double> values) {
  require(!values.empty(), ErrorCode::InvalidArgument, "lambda: empty table");
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(std::isfinite(values[i]) && values[i] > 0.0, ErrorCode::InvalidArgument,
            "lambda: entries must be positive and finite");
    if (i > 0)
      require(values[i] >= values[i - 1], ErrorCode::InvalidArgument,
              "lambda: sequence must be nondecreasing");
  }
  return LambdaSequence(Kind::Table, 0.0, std::move(values));
}

double LambdaSequence::operator()(std::int64_t j) const {
  require(j >= 1, ErrorCode::InvalidArgument, "lambda: index must be >= 1");
  if (kind_ == Kind::Power) return beta_ == 0.0 ? 1.0 : std::pow(static_cast<double>(j), beta_);
  const auto idx = std::min<std::size_t>(static_cast<std::size_t>(j), values_.size()) - 1;
  return values_[idx];
}

double LambdaSequence::reciprocal_sum(std::int64_t n) const {
  require(n >= 0, ErrorCode::InvalidArgument, "lambda: index must be >= 0");
  const auto last = static_cast<std::int64_t>(prefix_.size()) - 1;
  if (n <= last) return prefix_[static_cast<std::size_t>(n)];
  if (kind_ == Kind::Table) return prefix_.back() + static_cast<double>(n - last) / values_.back();
  if (beta_ == 0.0) return static_cast<double>(n);
  // Euler-Maclaurin for sum_{j=m+1}^{n} j^{-beta}
  const double m = static_cast<double>(last);
  const double x = static_cast<double>(n);
  const double b = beta_;
  const double integral = b == 1.0 ? std::log(x / m) : (std::pow(x, 1.0 - b) - std::pow(m, 1.0 - b)) / (1.0 - b);
  auto f = [b](double t) { return std::pow(t, -b); };
  auto f1 = [b](double t) { return -b * std::pow(t, -b - 1.0); };
  auto f3 = [b](double t) { return -b * (b + 1.0) * (b + 2.0) * std::pow(t, -b - 3.0); };
  const double tail = integral + 0.5 * (f(x) - f(m)) + (f1(x) - f1(m)) / 12.0 - (f3(x) - f3(m)) / 720.0;
  return prefix_.back() + tail;
}

std::string LambdaSequence::describe() const {
  std::ostringstream os;
  if (kind_ == Kind::Power)
    os << "power:" << beta_;
  else
    os << "table[" << values_.size() << "]";
  return os.str();
}

PhiSequence::PhiSequence(Kind kind, std::vector<OrliczFunction> phis,
                         std::optional<LambdaSequence> lambda)
    : kind_(kind), phis_(std::move(phis)), lambda_(std::move(lambda)) {}

PhiSequence PhiSequence::power_all(double q) {
  return PhiSequence(Kind::PowerAll, {OrliczFunction::power(q)}, std::nullopt);
}

PhiSequence PhiSequence::orlicz_all(OrliczFunction phi) {
  return PhiSequence(Kind::OrliczAll, {phi}, std::nullopt);
}

PhiSequence PhiSequence::orlicz_over_lambda(OrliczFunction phi, LambdaSequence lambda) {
  return PhiSequence(Kind::OrliczOverLambda, {phi}, std::move(lambda));
}

PhiSequence PhiSequence::custom(std::vector<OrliczFunction> list) {
  require(!list.empty(), ErrorCode::InvalidArgument, "phi sequence: empty custom list");
  // phi_{j+1} <= phi_j on a log-spaced check grid
  for (std::size_t j = 0; j + 1 < list.size(); ++j) {
    for (int e = -60; e <= 60; ++e) {
      const double x = std::pow(2.0, e / 4.0);
      const double a = list[j](x);
      const double b = list[j + 1](x);
      if (!std::isfinite(a) || !std::isfinite(b)) continue;
      require(approx_le(b, a), ErrorCode::InvalidArgument,
              "phi sequence: custom list must be pointwise nonincreasing in j");
    }
  }
  return PhiSequence(Kind::Custom, std::move(list), std::nullopt);
}

double PhiSequence::phi(std::int64_t j, double x) const {
  require(j >= 1, ErrorCode::InvalidArgument, "phi sequence: index must be >= 1");
  switch (kind_) {
    case Kind::PowerAll:
    case Kind::OrliczAll: return phis_.front()(x);
    case Kind::OrliczOverLambda: return phis_.front()(x) / (*lambda_)(j);
    case Kind::Custom: {
      const auto idx = std::min<std::size_t>(static_cast<std::size_t>(j), phis_.size()) - 1;
      return phis_[idx](x);
    }
  }
  return 0.0;
}

double PhiSequence::partial(std::int64_t n, double x) const {
  require(n >= 1, ErrorCode::InvalidArgument, "phi sequence: n must be >= 1");
  switch (kind_) {
    case Kind::PowerAll:
    case Kind::OrliczAll: return static_cast<double>(n) * phis_.front()(x);
    case Kind::OrliczOverLambda: return lambda_->reciprocal_sum(n) * phis_.front()(x);
    case Kind::Custom: {
      const auto len = static_cast<std::int64_t>(phis_.size());
      CompensatedSum s;
      for (std::int64_t j = 1; j <= std::min(n, len); ++j)
        s.add(phis_[static_cast<std::size_t>(j - 1)](x));
      if (n > len) s.add(static_cast<double>(n - len) * phis_.back()(x));
      return s.value();
    }
  }
  return 0.0;
}

std::optional<double> PhiSequence::partial_inverse_closed(std::int64_t n, double y) const {
  require(n >= 1, ErrorCode::InvalidArgument, "phi sequence: n must be >= 1");
  require(y >= 0.0, ErrorCode::InvalidArgument, "phi sequence: y must be >= 0");
  switch (kind_) {
    case Kind::PowerAll:
    case Kind::OrliczAll: return phis_.front().inverse(y / static_cast<double>(n));
    case Kind::OrliczOverLambda: return phis_.front().inverse(y / lambda_->reciprocal_sum(n));
    case Kind::Custom:
      if (phis_.size() == 1) return phis_.front().inverse(y / static_cast<double>(n));
      return std::nullopt;
  }
  return std::nullopt;
}

double PhiSequence::partial_inverse(std::int64_t n, double y) const {
  if (auto c = partial_inverse_closed(n, y)) return *c;
  return phi_partial_inverse(*this, n, y);
}

std::string PhiSequence::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::PowerAll: os << "power:" << phis_.front().exponent(); break;
    case Kind::OrliczAll: os << "orlicz:" << phis_.front().describe(); break;
    case Kind::OrliczOverLambda:
      os << "lambda:" << lambda_->describe() << "/" << phis_.front().describe();
      break;
    case Kind::Custom: {
      os << "custom:";
      for (std::size_t i = 0; i < phis_.size(); ++i) os << (i ? ";" : "") << phis_[i].describe();
      break;
    }
  }
  return os.str();
}

double phi_partial_inverse(const PhiSequence& Phi, std::int64_t n, double y) {
  require(std::isfinite(y) && y >= 0.0, ErrorCode::InvalidArgument,
          "phi_partial_inverse: y must be finite and >= 0");
  require(n >= 1, ErrorCode::InvalidArgument, "phi_partial_inverse: n must be >= 1");
  if (y == 0.0) return 0.0;
  double hi = 1.0;
  for (int i = 0; Phi.partial(n, hi) < y; ++i) {
    require(i < 2100 && std::isfinite(hi), ErrorCode::Numeric,
            "phi_partial_inverse: could not bracket the root");
    hi *= 2.0;
  }
  for (int i = 0; hi > 0.0 && Phi.partial(n, 0.5 * hi) >= y; ++i) {
    require(i < 2100, ErrorCode::Numeric, "phi_partial_inverse: could not bracket the root");
    hi *= 0.5;
  }
  double lo = 0.5 * hi;
  for (int it = 0; it < kInverseMaxIterations; ++it) {
    if (hi - lo <= 1e-12 * hi) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    if (Phi.partial(n, mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  fail(ErrorCode::Numeric, "phi_partial_inverse: bisection did not converge in 200 steps");
}

}  // namespace pvarlab
