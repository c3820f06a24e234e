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


#include "pvarlab/pvarlab.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "json.hpp"

#include "pvarlab/embeddings.hpp"
#include "pvarlab/error.hpp"
#include "pvarlab/kfunctional.hpp"
#include "pvarlab/report.hpp"
#include "pvarlab/specs.hpp"
#include "pvarlab/variation.hpp"

struct pvl_function {
  pvarlab::SampledFunction f;
};
struct pvl_modulus {
  pvarlab::ModulusOfVariation nu;
};
struct pvl_phi {
  pvarlab::PhiSequence phi;
};

namespace {

thread_local std::string last_error;

pvl_status set_error(pvl_status s, const char* msg) {
  last_error = msg;
  return s;
}

template <class Fn>
pvl_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return PVL_OK;
  } catch (const pvarlab::Error& e) {
    return set_error(static_cast<pvl_status>(static_cast<int>(e.code())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(PVL_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PVL_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PVL_INTERNAL, e.what());
  } catch (...) {
    return set_error(PVL_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (!p) pvarlab::fail(pvarlab::ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nlohmann::json parse_params(const char* text) {
  if (!text || !*text) return nlohmann::json::object();
  return nlohmann::json::parse(text);
}

}  // namespace

extern "C" {

const char* pvl_version(void) { return "0.1.0"; }

const char* pvl_last_error(void) { return last_error.c_str(); }

const char* pvl_status_name(pvl_status status) {
  switch (status) {
    case PVL_OK: return "ok";
    case PVL_INTERNAL: return "internal";
    default:
      if (status >= PVL_INVALID_ARGUMENT && status <= PVL_IO)
        return pvarlab::to_string(static_cast<pvarlab::ErrorCode>(static_cast<int>(status)));
      return "unknown";
  }
}

void pvl_string_free(char* s) { std::free(s); }

pvl_status pvl_function_new(const double* grid, const double* values, size_t count, pvl_function** out) {
  return guarded([&] {
    need(grid, "grid");
    need(values, "values");
    need(out, "out");
    *out = new pvl_function{pvarlab::SampledFunction(std::vector<double>(grid, grid + count),
                                                     std::vector<double>(values, values + count))};
  });
}

pvl_status pvl_function_from_spec(const char* spec, uint64_t seed, pvl_function** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new pvl_function{pvarlab::parse_function(spec, seed)};
  });
}

void pvl_function_free(pvl_function* f) { delete f; }

size_t pvl_function_size(const pvl_function* f) { return f ? f->f.size() : 0; }

size_t pvl_function_samples(const pvl_function* f, double* grid, double* values, size_t capacity) {
  if (!f) return 0;
  const std::size_t n = f->f.size();
  for (std::size_t i = 0; i < n && i < capacity; ++i) {
    if (grid) grid[i] = f->f.grid()[i];
    if (values) values[i] = f->f.values()[i];
  }
  return n;
}

pvl_status pvl_modulus_from_spec(const char* spec, pvl_modulus** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new pvl_modulus{pvarlab::parse_modulus(spec)};
  });
}

void pvl_modulus_free(pvl_modulus* nu) { delete nu; }

pvl_status pvl_modulus_eval(const pvl_modulus* nu, int64_t k, double* out) {
  return guarded([&] {
    need(nu, "nu");
    need(out, "out");
    *out = nu->nu(k);
  });
}

pvl_status pvl_phi_from_spec(const char* spec, pvl_phi** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new pvl_phi{pvarlab::parse_phi_sequence(spec)};
  });
}

void pvl_phi_free(pvl_phi* phi) { delete phi; }

pvl_status pvl_phi_inverse(const pvl_phi* phi, int64_t n, double y, double* out) {
  return guarded([&] {
    need(phi, "phi");
    need(out, "out");
    *out = pvarlab::phi_partial_inverse(phi->phi, n, y);
  });
}

pvl_status pvl_pvariation(const pvl_function* f, double p, int n, double* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = pvarlab::pvariation_dp(f->f, p, n).value;
  });
}

pvl_status pvl_pvariation_profile(const pvl_function* f, double p, int64_t n_max, double* out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    const auto prof = pvarlab::pvariation_profile(f->f, p, n_max);
    std::copy(prof.begin(), prof.end(), out);
  });
}

pvl_status pvl_vpnu_norm(const pvl_function* f, const pvl_modulus* nu, double p, int64_t n_max, double* out) {
  return guarded([&] {
    need(f, "f");
    need(nu, "nu");
    need(out, "out");
    *out = pvarlab::vpnu_norm(f->f, nu->nu, p, n_max).norm();
  });
}

pvl_status pvl_kfunctional(const pvl_function* f, double t, double p, double* lower, double* upper) {
  return guarded([&] {
    need(f, "f");
    const auto k = pvarlab::kfunctional_bounds(f->f, t, p);
    if (lower) *lower = k.lower;
    if (upper) *upper = k.upper;
  });
}

pvl_status pvl_embedding_verdict(const pvl_phi* phi, const pvl_modulus* nu, double p, int64_t horizon,
                                 pvl_verdict* out) {
  return guarded([&] {
    need(phi, "phi");
    need(nu, "nu");
    need(out, "out");
    const auto r = pvarlab::embedding_criterion(phi->phi, nu->nu, p, horizon);
    switch (r.verdict) {
      case pvarlab::CriterionVerdict::Embeds: *out = PVL_EMBEDS; break;
      case pvarlab::CriterionVerdict::Fails: *out = PVL_FAILS; break;
      default: *out = PVL_INCONCLUSIVE; break;
    }
  });
}

pvl_status pvl_report_run(const char* subcommand, const char* params_json, const char* format, char** out,
                          int* report_status) {
  return guarded([&] {
    need(subcommand, "subcommand");
    need(out, "out");
    const auto res = pvarlab::run_report(subcommand, parse_params(params_json));
    *out = dup(pvarlab::render(res, format ? format : "csv"));
    if (report_status) *report_status = res.status;
  });
}

pvl_status pvl_report_validate(const char* subcommand, const char* params_json, char** out) {
  return guarded([&] {
    need(subcommand, "subcommand");
    need(out, "out");
    std::string msg;
    for (const auto& e : pvarlab::validate_params(subcommand, parse_params(params_json)))
      msg += e + "\n";
    *out = dup(msg);
  });
}

pvl_status pvl_verify(uint64_t seed, unsigned jobs, const char* format, char** out, int* failures) {
  return guarded([&] {
    need(out, "out");
    nlohmann::json params{{"seed", seed}, {"jobs", jobs}};
    const auto res = pvarlab::run_report("verify", params);
    *out = dup(pvarlab::render(res, format ? format : "csv"));
    if (failures) *failures = res.json.value("failures", 0);
  });
}

}  // extern "C"
