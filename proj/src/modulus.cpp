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

#include "pvarlab/modulus.hpp"

#include <cmath>
#include <sstream>

#include "pvarlab/error.hpp"
#include "pvarlab/tolerance.hpp"

namespace pvarlab {

ModulusOfVariation::ModulusOfVariation(Kind kind, double alpha, std::vector<double> table)
    : kind_(kind), alpha_(alpha), table_(std::move(table)) {}

ModulusOfVariation ModulusOfVariation::power(double alpha) {
  require(std::isfinite(alpha) && alpha > 0.0 && alpha <= 1.0, ErrorCode::InvalidArgument,
          "modulus: power exponent must lie in (0, 1]");
  return ModulusOfVariation(Kind::Power, alpha, {});
}

ModulusOfVariation ModulusOfVariation::log() { return ModulusOfVariation(Kind::Log, 0.0, {}); }

ModulusOfVariation ModulusOfVariation::table(std::vector<double> values) {
  require(!values.empty(), ErrorCode::InvalidArgument, "modulus: empty table");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    const auto k = std::to_string(i + 1);
    require(std::isfinite(v) && v > 0.0, ErrorCode::InvalidArgument,
            "modulus: nu(" + k + ") must be positive and finite");
    const double prev = i == 0 ? 0.0 : values[i - 1];
    require(approx_le(prev, v), ErrorCode::InvalidArgument,
            "modulus: decreasing step at k=" + k);
    if (i + 1 < values.size()) {
      // nu(k+1) + nu(k-1) <= 2 nu(k) with nu(0) = 0
      require(approx_le(values[i + 1] + prev, 2.0 * v), ErrorCode::InvalidArgument,
              "modulus: concavity violated at k=" + k);
    }
  }
  return ModulusOfVariation(Kind::Table, 0.0, std::move(values));
}

std::optional<std::int64_t> ModulusOfVariation::max_index() const noexcept {
  if (kind_ == Kind::Table) return static_cast<std::int64_t>(table_.size());
  return std::nullopt;
}

void ModulusOfVariation::require_index(std::int64_t k) const {
  require(k >= 0, ErrorCode::Domain, "modulus: negative index");
  if (kind_ == Kind::Table && k > static_cast<std::int64_t>(table_.size())) {
    fail(ErrorCode::Domain, "modulus: table of length " + std::to_string(table_.size()) +
                                " has no entry nu(" + std::to_string(k) + ")");
  }
}

double ModulusOfVariation::operator()(std::int64_t k) const {
  require_index(k);
  if (k == 0) return 0.0;
  const auto x = static_cast<double>(k);
  switch (kind_) {
    case Kind::Power: return std::pow(x, alpha_);
    case Kind::Log: return std::log1p(x);
    case Kind::Table: return table_[static_cast<std::size_t>(k - 1)];
  }
  return 0.0;
}

double ModulusOfVariation::power_increment(std::int64_t k, double p) const {
  require(k >= 1, ErrorCode::InvalidArgument, "modulus: increment index must be >= 1");
  require_index(k);
  if (kind_ == Kind::Power) {
    if (k == 1) return 1.0;
    const double s = alpha_ * p;
    const auto x = static_cast<double>(k);
    return -std::pow(x, s) * std::expm1(s * std::log1p(-1.0 / x));
  }
  const double hi = (*this)(k);
  const double lo = (*this)(k - 1);
  if (p == 1.0) return hi - lo;
  return std::pow(hi, p) - std::pow(lo, p);
}

std::string ModulusOfVariation::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Power: os << "power:" << alpha_; break;
    case Kind::Log: os << "log"; break;
    case Kind::Table: os << "table[" << table_.size() << "]"; break;
  }
  return os.str();
}

ModulusProperties inspect_modulus(const ModulusOfVariation& nu, double p,
                                  std::int64_t horizon) {
  require(std::isfinite(p) && p >= 1.0, ErrorCode::InvalidArgument, "modulus: p must be >= 1");
  ModulusProperties props;
  const std::int64_t h = nu.max_index().value_or(horizon);
  props.checked_up_to = h;
  props.nondecreasing = true;
  props.concave = true;
  props.nu_p_concave = true;
  props.ratio_nonincreasing = true;
  const double inv_p = 1.0 / p;
  auto ratio = [&](std::int64_t k) { return nu(k) / std::pow(static_cast<double>(k), inv_p); };
  for (std::int64_t k = 1; k <= h; ++k) {
    const double cur = nu(k);
    const double prev = nu(k - 1);
    if (!approx_le(prev, cur)) props.nondecreasing = false;
    if (k < h) {
      if (!approx_le(nu(k + 1) + prev, 2.0 * cur)) props.concave = false;
      if (!approx_le(nu.power_increment(k + 1, p), nu.power_increment(k, p)))
        props.nu_p_concave = false;
    }
    if (k >= 2 && !approx_le(ratio(k), ratio(k - 1))) props.ratio_nonincreasing = false;
  }
  props.nu_p_quasiconcave = props.nondecreasing && props.ratio_nonincreasing;
  switch (nu.kind()) {
    case ModulusOfVariation::Kind::Power: props.ratio_to_zero = nu.alpha() < inv_p; break;
    case ModulusOfVariation::Kind::Log: props.ratio_to_zero = true; break;
    case ModulusOfVariation::Kind::Table:
      props.ratio_to_zero = props.ratio_nonincreasing && h >= 2 &&
                            ratio(h) < ratio(1) * (1.0 - kTolerance);
      break;
  }
  return props;
}

ValidatedModulus validate_modulus(const ModulusOfVariation& nu, double p) {
  auto props = inspect_modulus(nu, p);
  if (!props.ratio_to_zero) {
    std::ostringstream os;
    os << "modulus " << nu.describe() << ": nu(k)/k^(1/p) does not decrease to 0 for p=" << p;
    fail(ErrorCode::InvalidArgument, os.str());
  }
  return ValidatedModulus{nu, p, props};
}

ValidatedModulus validate_modulus(const std::vector<double>& table, double p) {
  return validate_modulus(ModulusOfVariation::table(table), p);
}

double epsilon_p(const ModulusOfVariation& nu, double p, std::int64_t k) {
  require(k >= 1, ErrorCode::InvalidArgument, "epsilon_p: k must be >= 1");
  const double inc = nu.power_increment(k, p);
  if (inc <= 0.0) return 0.0;
  return p == 1.0 ? inc : std::pow(inc, 1.0 / p);
}

}  // namespace pvarlab
