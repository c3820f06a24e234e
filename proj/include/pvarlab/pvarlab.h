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


// C interface to pvarlab. Objects are opaque handles owned by the caller and
// released with the matching *_free function. Every fallible call returns a
// pvl_status; on failure pvl_last_error() describes it (per thread).

#ifndef PVARLAB_H
#define PVARLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PVL_API __declspec(dllexport)
#else
#define PVL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pvl_status {
  PVL_OK = 0,
  PVL_INVALID_ARGUMENT = 1,
  PVL_BUDGET_EXCEEDED = 2,
  PVL_DOMAIN = 3,
  PVL_NOT_FOUND = 4,
  PVL_PRECONDITION = 5,
  PVL_NUMERIC = 6,
  PVL_IO = 7,
  PVL_INTERNAL = 8
} pvl_status;

typedef enum pvl_verdict {
  PVL_EMBEDS = 0,
  PVL_FAILS = 1,
  PVL_INCONCLUSIVE = 2
} pvl_verdict;

typedef struct pvl_function pvl_function;
typedef struct pvl_modulus pvl_modulus;
typedef struct pvl_phi pvl_phi;

PVL_API const char* pvl_version(void);
PVL_API const char* pvl_last_error(void);
PVL_API const char* pvl_status_name(pvl_status status);
PVL_API void pvl_string_free(char* s);

// Samples (grid[i], values[i]), grid strictly increasing, count >= 2.
PVL_API pvl_status pvl_function_new(const double* grid, const double* values, size_t count,
                                    pvl_function** out);
// Same text form as the command line --function flag.
PVL_API pvl_status pvl_function_from_spec(const char* spec, uint64_t seed, pvl_function** out);
PVL_API void pvl_function_free(pvl_function* f);
PVL_API size_t pvl_function_size(const pvl_function* f);
// Copies up to `capacity` samples; returns the sample count.
PVL_API size_t pvl_function_samples(const pvl_function* f, double* grid, double* values,
                                    size_t capacity);

PVL_API pvl_status pvl_modulus_from_spec(const char* spec, pvl_modulus** out);
PVL_API void pvl_modulus_free(pvl_modulus* nu);
PVL_API pvl_status pvl_modulus_eval(const pvl_modulus* nu, int64_t k, double* out);

PVL_API pvl_status pvl_phi_from_spec(const char* spec, pvl_phi** out);
PVL_API void pvl_phi_free(pvl_phi* phi);
// Inverse of Phi_n at y.
PVL_API pvl_status pvl_phi_inverse(const pvl_phi* phi, int64_t n, double y, double* out);

// upsilon_p(n, f) by dynamic programming.
PVL_API pvl_status pvl_pvariation(const pvl_function* f, double p, int n, double* out);
// upsilon_p(k, f) for k = 1..n_max into out[0..n_max-1].
PVL_API pvl_status pvl_pvariation_profile(const pvl_function* f, double p, int64_t n_max,
                                          double* out);
// Variation part plus sup part of the V_p[nu] norm, profile truncated at n_max.
PVL_API pvl_status pvl_vpnu_norm(const pvl_function* f, const pvl_modulus* nu, double p,
                                 int64_t n_max, double* out);
PVL_API pvl_status pvl_kfunctional(const pvl_function* f, double t, double p, double* lower,
                                   double* upper);
PVL_API pvl_status pvl_embedding_verdict(const pvl_phi* phi, const pvl_modulus* nu, double p,
                                         int64_t horizon, pvl_verdict* out);

// Runs a subcommand. params_json is an object keyed by flag names without
// dashes, e.g. {"function":"zigzag:5","p":1,"n":4}. format is "csv" or "json".
// *out receives the rendered report (free with pvl_string_free) and
// *report_status the subcommand status (nonzero when verify finds failures).
PVL_API pvl_status pvl_report_run(const char* subcommand, const char* params_json,
                                  const char* format, char** out, int* report_status);
// Validates only. *out receives the violations, one per line ("" when valid).
PVL_API pvl_status pvl_report_validate(const char* subcommand, const char* params_json,
                                       char** out);
PVL_API pvl_status pvl_verify(uint64_t seed, unsigned jobs, const char* format, char** out,
                              int* failures);

#ifdef __cplusplus
}
#endif

#endif  // PVARLAB_H
