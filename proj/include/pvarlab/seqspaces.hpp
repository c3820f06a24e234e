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


#ifndef PVARLAB_SEQSPACES_HPP
#define PVARLAB_SEQSPACES_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pvarlab/modulus.hpp"
#include "pvarlab/phi.hpp"

namespace pvarlab {

/// |x| sorted in nonincreasing order.
std::vector<double> rearrange(std::span<const double> x);

/// sup_n (sum_{j<=n} (x*_j)^p)^{1/p} / nu(n), over the support of x.
double marcinkiewicz_norm(std::span<const double> x, const ModulusOfVariation& nu, double p);

/// Positive nonincreasing weights with divergent sum.
class LorentzWeight {
 public:
  enum class Kind { Power, Table };
  /// w_j = j^{-beta}, 0 <= beta <= 1
  static LorentzWeight power(double beta);
  /// w_j = values[j-1]; asking past the end throws ErrorCode::Domain.
  static LorentzWeight table(std::vector<double> values);

  double operator()(std::int64_t j) const;
  Kind kind() const noexcept { return kind_; }
  std::string describe() const;

 private:
  LorentzWeight(Kind kind, double beta, std::vector<double> values)
      : kind_(kind), beta_(beta), values_(std::move(values)) {}
  Kind kind_;
  double beta_ = 0.0;
  std::vector<double> values_;
};

/// (sum (x*_j)^q w_j)^{1/q}
double lorentz_norm(std::span<const double> x, const LorentzWeight& w, double q);

/// Luxemburg norm inf{c > 0 : sum phi(|x_j|/c) <= 1}; 0 for x = 0.
double orlicz_norm(std::span<const double> x, const OrliczFunction& phi);

/// inf{c > 0 : sum phi_j(x*_j / c) <= 1}, on the rearrangement.
double modular_norm(std::span<const double> x, const PhiSequence& Phi);

struct MarcinkiewiczSpace {
  ModulusOfVariation nu;
  double p;
};
struct LorentzSpace {
  LorentzWeight w;
  double q;
};
struct OrliczSpace {
  OrliczFunction phi;
};
struct ModularSpace {
  PhiSequence Phi;
};
using SequenceSpace = std::variant<MarcinkiewiczSpace, LorentzSpace, OrliczSpace, ModularSpace>;

double sequence_norm(const SequenceSpace& space, std::span<const double> x);
std::string describe(const SequenceSpace& space);

/// Norm of the indicator of {1, ..., n}. For Marcinkiewicz spaces the value
/// is checked against n^{1/p}/nu(n) when nu(k)/k^{1/p} is nonincreasing.
double fundamental_sequence(const SequenceSpace& space, std::int64_t n);

/// (sum_{k<=h} eps_p(k)/k, sum_{k<=h} nu(k)/k^{1+1/p})
std::pair<double, double> dual_harmonic_estimate(const ModulusOfVariation& nu, double p,
                                                 std::int64_t horizon);

}  // namespace pvarlab

#endif  // PVARLAB_SEQSPACES_HPP
