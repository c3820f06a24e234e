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

#ifndef PVARLAB_MODULUS_HPP
#define PVARLAB_MODULUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pvarlab {

/// A modulus of variation: a positive, nondecreasing, concave sequence
/// nu(1), nu(2), ... with the convention nu(0) = 0.
///
/// Closed-form families are valid for every k. Tables are valid up to their
/// length; asking for nu(k) past the end throws ErrorCode::Domain rather than
/// extrapolating.
class ModulusOfVariation {
 public:
  enum class Kind { Power, Log, Table };

  /// nu(k) = k^alpha, 0 < alpha <= 1.
  static ModulusOfVariation power(double alpha);
  /// nu(k) = log(k + 1).
  static ModulusOfVariation log();
  /// nu(k) = values[k - 1]. Rejects nonpositive entries, decreasing steps and
  /// concavity violations beyond 1e-12 slack.
  static ModulusOfVariation table(std::vector<double> values);

  double operator()(std::int64_t k) const;

  /// nu(k)^p - nu(k-1)^p, evaluated without cancellation for the power family.
  double power_increment(std::int64_t k, double p) const;

  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  const std::vector<double>& table_values() const noexcept { return table_; }
  /// Largest valid index for tables, nullopt for closed-form families.
  std::optional<std::int64_t> max_index() const noexcept;
  void require_index(std::int64_t k) const;

  std::string describe() const;

 private:
  ModulusOfVariation(Kind kind, double alpha, std::vector<double> table);

  Kind kind_;
  double alpha_ = 0.0;
  std::vector<double> table_;
};

/// Which of the standing assumptions hold for a modulus in a given p-context.
struct ModulusProperties {
  bool nondecreasing = false;
  bool concave = false;
  /// nu^p nondecreasing and nu^p(k)/k nonincreasing.
  bool nu_p_quasiconcave = false;
  bool nu_p_concave = false;
  /// nu(k)/k^{1/p} nonincreasing on the checked range.
  bool ratio_nonincreasing = false;
  /// nu(k)/k^{1/p} -> 0. Symbolic for families; for tables "strictly decreases
  /// somewhere and never increases".
  bool ratio_to_zero = false;
  std::int64_t checked_up_to = 0;
};

struct ValidatedModulus {
  ModulusOfVariation nu;
  double p;
  ModulusProperties properties;
};

/// Scans the defining inequalities for k <= horizon (tables: their length).
ModulusProperties inspect_modulus(const ModulusOfVariation& nu, double p,
                                  std::int64_t horizon = 4096);

/// Validates nu for use with exponent p. Throws ErrorCode::InvalidArgument when
/// nu(k)/k^{1/p} does not decrease to zero.
ValidatedModulus validate_modulus(const ModulusOfVariation& nu, double p);
ValidatedModulus validate_modulus(const std::vector<double>& table, double p);

/// (nu(k)^p - nu(k-1)^p)^{1/p}, k >= 1.
double epsilon_p(const ModulusOfVariation& nu, double p, std::int64_t k);

}  // namespace pvarlab

#endif  // PVARLAB_MODULUS_HPP
