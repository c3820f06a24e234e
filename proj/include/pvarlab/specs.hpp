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


#ifndef PVARLAB_SPECS_HPP
#define PVARLAB_SPECS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pvarlab/fourier.hpp"
#include "pvarlab/modulus.hpp"
#include "pvarlab/phi.hpp"
#include "pvarlab/sampled_function.hpp"
#include "pvarlab/seqspaces.hpp"

// Text forms of the parameter families, as accepted by the CLI and the C API.
// Every parser throws ErrorCode::InvalidArgument naming the offending text.
namespace pvarlab {

double parse_real(std::string_view s);
std::int64_t parse_integer(std::string_view s);
/// "a,b,c"
std::vector<double> parse_real_list(std::string_view s);

/// "power:A" (n^A), "log" (log(n+1)), "table:v1,v2,..."
ModulusOfVariation parse_modulus(std::string_view s);
/// "power:A[:C]", "invlog[:C]"
ModulusOfContinuity parse_omega(std::string_view s);
/// "power:Q[:C]", "exp"
OrliczFunction parse_orlicz(std::string_view s);
/// "power:B" (j^B), "table:v1,v2,..."
LambdaSequence parse_lambda(std::string_view s);
/// "power:Q", "orlicz:PHI", "lambda:LAMBDA/PHI", "custom:PHI;PHI;..."
PhiSequence parse_phi_sequence(std::string_view s);
/// "power:B" (j^-B), "table:w1,w2,..."
LorentzWeight parse_weight(std::string_view s);

/// Named sample functions.
///   on [0, 1], L points with both ends: zigzag:L, linear:L, sin:L[:K] (sin 2 pi K x),
///     random:L (uniform on [-1, 1], from `seed`)
///   periodic on [0, 2 pi), L samples: square:L, sawtooth:L, triangle:L, cos:L[:K]
///   file:PATH (CSV or JSON)
SampledFunction parse_function(std::string_view s, std::uint64_t seed = 0);

/// Equally spaced samples on [0, 1].
SampledFunction function_from_values(std::string_view list);

}  // namespace pvarlab

#endif  // PVARLAB_SPECS_HPP
