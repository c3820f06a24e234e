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


#include "pvarlab/specs.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "pvarlab/error.hpp"
#include "pvarlab/io.hpp"
#include "pvarlab/random.hpp"

namespace pvarlab {

namespace {

[[noreturn]] void bad(std::string_view what, std::string_view s) {
  fail(ErrorCode::InvalidArgument, std::string(what) + ": cannot parse '" + std::string(s) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

// "head:rest" -> (head, rest); rest empty when there is no colon
std::pair<std::string_view, std::string_view> head_tail(std::string_view s) {
  const auto pos = s.find(':');
  if (pos == std::string_view::npos) return {s, {}};
  return {s.substr(0, pos), s.substr(pos + 1)};
}

std::size_t parse_size(std::string_view s, std::string_view what) {
  const auto v = parse_integer(s);
  require(v >= 2 && v <= 50'000'000, ErrorCode::InvalidArgument,
          std::string(what) + ": sample count must be in [2, 5e7]");
  return static_cast<std::size_t>(v);
}

}  // namespace

double parse_real(std::string_view s) {
  s = trim(s);
  if (s == "inf" || s == "+inf") return INFINITY;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != end) bad("number", s);
  return v;
}

std::int64_t parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto r = std::from_chars(s.data(), end, v);
  if (s.empty() || r.ec != std::errc{} || r.ptr != end) {
    // accept integral reals such as 1e6
    double d = 0.0;
    const auto rd = std::from_chars(s.data(), end, d);
    if (s.empty() || rd.ec != std::errc{} || rd.ptr != end || d != std::floor(d) ||
        std::fabs(d) > 9.0e15)
      bad("integer", s);
    return static_cast<std::int64_t>(d);
  }
  return v;
}

std::vector<double> parse_real_list(std::string_view s) {
  std::vector<double> out;
  if (trim(s).empty()) return out;
  for (auto part : split(s, ',')) out.push_back(parse_real(part));
  return out;
}

ModulusOfVariation parse_modulus(std::string_view s) {
  const auto [h, t] = head_tail(trim(s));
  if (h == "power" && !t.empty()) return ModulusOfVariation::power(parse_real(t));
  if (h == "sqrt" && t.empty()) return ModulusOfVariation::power(0.5);
  if (h == "log" && t.empty()) return ModulusOfVariation::log();
  if (h == "table" && !t.empty()) return ModulusOfVariation::table(parse_real_list(t));
  bad("modulus of variation", s);
}

ModulusOfContinuity parse_omega(std::string_view s) {
  const auto [h, t] = head_tail(trim(s));
  const auto parts = t.empty() ? std::vector<std::string_view>{} : split(t, ':');
  if (h == "power" && (parts.size() == 1 || parts.size() == 2))
    return ModulusOfContinuity::power(parse_real(parts[0]),
                                      parts.size() == 2 ? parse_real(parts[1]) : 1.0);
  if (h == "invlog" && parts.size() <= 1)
    return ModulusOfContinuity::inverse_log(parts.empty() ? 1.0 : parse_real(parts[0]));
  bad("modulus of continuity", s);
}

OrliczFunction parse_orlicz(std::string_view s) {
  const auto [h, t] = head_tail(trim(s));
  const auto parts = t.empty() ? std::vector<std::string_view>{} : split(t, ':');
  if (h == "power" && (parts.size() == 1 || parts.size() == 2))
    return OrliczFunction::power(parse_real(parts[0]), parts.size() == 2 ? parse_real(parts[1]) : 1.0);
  if (h == "exp" && parts.empty()) return OrliczFunction::exp_minus_one();
  bad("Orlicz function", s);
}

LambdaSequence parse_lambda(std::string_view s) {
  const auto [h, t] = head_tail(trim(s));
  if (h == "power" && !t.empty()) return LambdaSequence::power(parse_real(t));
  if (h == "table" && !t.empty()) return LambdaSequence::table(parse_real_list(t));
  bad("lambda sequence", s);
}

PhiSequence parse_phi_sequence(std::string_view s) {
  const auto [h, t] = head_tail(trim(s));
  if (h == "power" && !t.empty()) return PhiSequence::power_all(parse_real(t));
  if (h == "orlicz" && !t.empty()) return PhiSequence::orlicz_all(parse_orlicz(t));
  if (h == "lambda") {
    const auto slash = t.find('/');
    if (slash != std::string_view::npos)
      return PhiSequence::orlicz_over_lambda(parse_orlicz(t.substr(slash + 1)),
                                             parse_lambda(t.substr(0, slash)));
  }
  if (h == "custom" && !t.empty()) {
    std::vector<OrliczFunction> list;
    for (auto part : split(t, ';')) list.push_back(parse_orlicz(part));
    return PhiSequence::custom(std::move(list));
  }
  bad("phi sequence", s);
}

LorentzWeight parse_weight(std::string_view s) {
  const auto [h, t] = head_tail(trim(s));
  if (h == "power" && !t.empty()) return LorentzWeight::power(parse_real(t));
  if (h == "table" && !t.empty()) return LorentzWeight::table(parse_real_list(t));
  bad("Lorentz weight", s);
}

SampledFunction function_from_values(std::string_view list) {
  auto v = parse_real_list(list);
  require(v.size() >= 2, ErrorCode::InvalidArgument, "values: need at least two samples");
  return SampledFunction::uniform(0.0, 1.0, std::move(v));
}

SampledFunction parse_function(std::string_view s, std::uint64_t seed) {
  constexpr double kPi = std::numbers::pi;
  s = trim(s);
  const auto [h, t] = head_tail(s);
  if (h == "file") {
    require(!t.empty(), ErrorCode::InvalidArgument, "function: file: needs a path");
    return load_function(std::string(t));
  }
  const auto parts = t.empty() ? std::vector<std::string_view>{} : split(t, ':');
  if (parts.empty() || parts.size() > 2) bad("function", s);
  const auto L = parse_size(parts[0], "function");
  const double K = parts.size() == 2 ? parse_real(parts[1]) : 1.0;
  auto unit = [&](auto f) {
    std::vector<double> v(L);
    for (std::size_t i = 0; i < L; ++i) v[i] = f(static_cast<double>(i) / static_cast<double>(L - 1), i);
    return SampledFunction::uniform(0.0, 1.0, std::move(v));
  };
  auto periodic = [&](auto f) {
    std::vector<double> g(L), v(L);
    for (std::size_t i = 0; i < L; ++i) {
      g[i] = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(L);
      v[i] = f(g[i]);
    }
    return SampledFunction::periodic(std::move(g), std::move(v), 2.0 * kPi);
  };
  const bool one = parts.size() == 1;
  if (h == "zigzag" && one) return unit([](double, std::size_t i) { return double(i % 2); });
  if (h == "linear" && one) return unit([](double x, std::size_t) { return x; });
  if (h == "sin") return unit([&](double x, std::size_t) { return std::sin(2.0 * kPi * K * x); });
  if (h == "random" && one) {
    Random rng(seed);
    return unit([&](double, std::size_t) { return rng.uniform(-1.0, 1.0); });
  }
  if (h == "square" && one)
    return periodic([&](double x) {
      if (x == 0.0 || std::fabs(x - kPi) < 1e-12) return 0.0;
      return x < kPi ? 1.0 : -1.0;
    });
  if (h == "sawtooth" && one) return periodic([&](double x) { return x == 0.0 ? 0.0 : (kPi - x) / 2.0; });
  if (h == "triangle" && one) return periodic([&](double x) { return std::fabs(x - kPi); });
  if (h == "cos") return periodic([&](double x) { return std::cos(K * x); });
  bad("function", s);
}

}  // namespace pvarlab
