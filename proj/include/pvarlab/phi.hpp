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


#ifndef PVARLAB_PHI_HPP
#define PVARLAB_PHI_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pvarlab {

/// Orlicz function: increasing, convex, phi(0) = 0.
class OrliczFunction {
 public:
  enum class Kind { Power, ExpMinusOne };

  /// c x^q, q >= 1, c > 0
  static OrliczFunction power(double q, double c = 1.0);
  /// e^x - 1
  static OrliczFunction exp_minus_one();

  double operator()(double x) const;
  double inverse(double y) const;  // closed form

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return q_; }
  double coefficient() const noexcept { return c_; }
  std::string describe() const;

 private:
  OrliczFunction(Kind kind, double q, double c) : kind_(kind), q_(q), c_(c) {}
  Kind kind_;
  double q_ = 1.0;
  double c_ = 1.0;
};

/// Lambda-sequence: positive, nondecreasing, with divergent sum of 1/lambda_j.
class LambdaSequence {
 public:
  enum class Kind { Power, Table };

  /// lambda_j = j^beta, 0 <= beta <= 1 (beta > 1 has summable reciprocals).
  static LambdaSequence power(double beta);
  /// lambda_j = values[j-1], the last value repeated past the end.
  static LambdaSequence table(std::vector<double> values);

  double operator()(std::int64_t j) const;
  /// Lambda_n = sum_{j<=n} 1/lambda_j
  double reciprocal_sum(std::int64_t n) const;

  Kind kind() const noexcept { return kind_; }
  double beta() const noexcept { return beta_; }
  std::string describe() const;

 private:
  LambdaSequence(Kind kind, double beta, std::vector<double> values);
  Kind kind_;
  double beta_ = 0.0;
  std::vector<double> values_;
  std::vector<double> prefix_;  // prefix_[n] = Lambda_n for n < prefix_.size()
};

/// A Phi-sequence phi_1 >= phi_2 >= ... of Orlicz functions with
/// sum_j phi_j(x) = infinity for x > 0.
class PhiSequence {
 public:
  enum class Kind { PowerAll, OrliczAll, OrliczOverLambda, Custom };

  /// phi_j(x) = x^q for every j
  static PhiSequence power_all(double q);
  static PhiSequence orlicz_all(OrliczFunction phi);
  /// phi_j = phi / lambda_j
  static PhiSequence orlicz_over_lambda(OrliczFunction phi, LambdaSequence lambda);
  /// phi_j = list[j-1], the last one repeated; must be pointwise nonincreasing in j.
  static PhiSequence custom(std::vector<OrliczFunction> list);

  double phi(std::int64_t j, double x) const;
  /// Phi_n(x) = sum_{j<=n} phi_j(x), closed form per kind.
  double partial(std::int64_t n, double x) const;
  /// Closed-form inverse of Phi_n when one exists.
  std::optional<double> partial_inverse_closed(std::int64_t n, double y) const;
  /// Closed form if available, otherwise bisection.
  double partial_inverse(std::int64_t n, double y) const;

  Kind kind() const noexcept { return kind_; }
  const std::vector<OrliczFunction>& functions() const noexcept { return phis_; }
  const std::optional<LambdaSequence>& lambda() const noexcept { return lambda_; }
  std::string describe() const;

 private:
  PhiSequence(Kind kind, std::vector<OrliczFunction> phis, std::optional<LambdaSequence> lambda);
  Kind kind_;
  std::vector<OrliczFunction> phis_;
  std::optional<LambdaSequence> lambda_;
};

/// Maximum bisection steps in phi_partial_inverse.
inline constexpr int kInverseMaxIterations = 200;

/// x with Phi_n(x) = y by monotone bisection to 1e-12 relative.
double phi_partial_inverse(const PhiSequence& Phi, std::int64_t n, double y);

}  // namespace pvarlab

#endif  // PVARLAB_PHI_HPP
