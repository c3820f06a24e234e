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


#ifndef PVARLAB_FOURIER_HPP
#define PVARLAB_FOURIER_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pvarlab/modulus.hpp"
#include "pvarlab/sampled_function.hpp"

namespace pvarlab {

/// Real trigonometric coefficients with S_n = a0/2 + sum a_k cos(k w x) + b_k sin(k w x),
/// w = 2 pi / period.
struct FourierCoeffs {
  double a0 = 0.0;
  std::vector<double> a;  // a[k-1] = a_k
  std::vector<double> b;
  double period = 0.0;

  int N() const noexcept { return static_cast<int>(a.size()); }
  /// sqrt(a_k^2 + b_k^2)
  double magnitude(int k) const;
};

/// Discrete (trapezoid) coefficients of a periodic f sampled uniformly over one
/// period. A closing sample equal to first + period is dropped. Requires
/// N < L/2 with L the number of distinct samples.
FourierCoeffs fourier_coeffs(const SampledFunction& f, int N);

std::vector<double> partial_sum(const FourierCoeffs& c, int n, std::span<const double> x);
/// Cesaro mean of S_0..S_n.
std::vector<double> fejer_mean(const FourierCoeffs& c, int n, std::span<const double> x);

/// K_n(t) = (1/(2(n+1))) (sin((n+1)t/2) / sin(t/2))^2, K_n(0) = (n+1)/2.
double fejer_kernel(int n, double t);
/// Integral of K_n over [-pi, pi] by adaptive Simpson (expected value pi).
double fejer_kernel_integral(int n);

/// A modulus of continuity: closed form or computed from samples.
class ModulusOfContinuity {
 public:
  enum class Kind { Power, InverseLog, Sampled };

  /// scale * delta^alpha, alpha in (0, 1]
  static ModulusOfContinuity power(double alpha, double scale = 1.0);
  /// scale / log(e + 1/delta)
  static ModulusOfContinuity inverse_log(double scale = 1.0);
  static ModulusOfContinuity sampled(SampledFunction f);

  double operator()(double delta) const;
  Kind kind() const noexcept { return kind_; }
  std::string describe() const;

 private:
  ModulusOfContinuity(Kind kind, double alpha, double scale, std::optional<SampledFunction> f);

  Kind kind_;
  double alpha_ = 1.0;
  double scale_ = 1.0;
  std::optional<SampledFunction> f_;
};

/// Grid-restricted sup over pairs of samples at distance h <= delta. For
/// periodic f pairs wrap around the period.
double modulus_of_continuity(const SampledFunction& f, double delta);

/// Smallest minimiser r in [1, n-1] of
/// w(1/n) H_r + sum_{k=r+1}^{n-1} nu(k)/k^{1+1/p}.
std::int64_t theta(const ModulusOfVariation& nu, const ModulusOfContinuity& omega, double p,
                   std::int64_t n);

struct ConvergenceSequences {
  std::int64_t n = 0;
  std::int64_t theta = 0;
  double rho = 0.0;
  double sigma = 0.0;
  double tau = 0.0;
  double eta = 0.0;
  // shared pieces, kept for the identity checks
  double omega_n = 0.0;     // w(1/n)
  double head = 0.0;        // w(1/n) H_theta
  double tail_nu = 0.0;     // sum nu(k)/k^{1+1/p}, k = theta+1..n-1
  double tail_eps = 0.0;    // sum eps_p(k)/k
  double tail_diff = 0.0;   // sum (nu(k) - nu(k-1))/k^{1/p}
  double tail_delta = 0.0;  // sum (k^{-1/p} - (k+1)^{-1/p}) nu(k)
  double tail_q = 0.0;      // sum nu(k) Q_k / k^{1+1/p}
};

ConvergenceSequences convergence_sequences(const ModulusOfVariation& nu,
                                           const ModulusOfContinuity& omega, double p,
                                           std::int64_t n);

/// Q_k = 1 - k + k^{1+1/p}/(k+1)^{1/p}, evaluated without cancellation.
double lemma_q(std::int64_t k, double p);

/// k^{-1/p} - (k+1)^{-1/p}
double delta_inverse_root(std::int64_t k, double p);

enum class SeriesVerdict { Converges, Diverges, Inconclusive };
const char* to_string(SeriesVerdict v) noexcept;

struct SeriesReport {
  std::string name;
  double partial_quarter = 0.0;  // partial sum at horizon/4
  double partial_half = 0.0;
  double partial = 0.0;          // at horizon
  SeriesVerdict numeric = SeriesVerdict::Inconclusive;
  std::optional<SeriesVerdict> closed_form;  // families only
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
};

struct Unif2Report {
  std::int64_t horizon = 0;
  std::vector<SeriesReport> series;  // (ii), (iii), (iv), (v), dual lower form
  bool agree = false;
};

/// The five series of the uniform-convergence criterion with numeric and
/// closed-form verdicts. horizon >= 16.
Unif2Report unif2_verdicts(const ModulusOfVariation& nu, double p, std::int64_t horizon);

struct CoeffDecayReport {
  double sup = 0.0;            // sup_n |f^(n)| n^{1/p} / nu(n)
  std::vector<double> ratios;  // ratios[n-1]
};

CoeffDecayReport coeff_decay_report(const SampledFunction& f, const ModulusOfVariation& nu,
                                    double p, int N);

/// (integral over [a pi/n, b pi/n] of sin^2(n t)/t, (1/12) sum_{i=a}^{b} 1/i)
std::pair<double, double> sine_integral_lower(std::int64_t a, std::int64_t b, std::int64_t n);

struct NikolskiiCheck {
  double error = 0.0;  // max over the grid of |f - S_n f|
  double bound = 0.0;  // sigma(n) + nu(n)/n^{1/p}
};

NikolskiiCheck nikolskii_bound_check(const SampledFunction& f, const ModulusOfVariation& nu,
                                     const ModulusOfContinuity& omega, double p, int n);

struct FejerContraction {
  double original = 0.0;  // V_{p,nu}(f) on the grid
  double mean = 0.0;      // V_{p,nu}(F_n f) on the same grid
};

FejerContraction fejer_contraction(const SampledFunction& f, const ModulusOfVariation& nu,
                                   double p, int n, std::int64_t n_max);

}  // namespace pvarlab

#endif  // PVARLAB_FOURIER_HPP
