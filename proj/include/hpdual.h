// Copyright 2026 The hpdual Authors
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

/* C interface to hpdual: Hermite-Pade polynomials of type I and II for a
 * tuple of formal power series at infinity, and the exact check that the
 * two polynomial matrices they generate are mutually inverse.
 *
 * Handles are opaque and owned by the caller; release them with the
 * matching _free function. Every fallible call returns an hpd_status. On
 * failure a human-readable message for the calling thread is available
 * from hpd_last_error() until the next call on that thread.
 */

#ifndef HPDUAL_H
#define HPDUAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HPDUAL_BUILDING_LIBRARY)
#    define HPD_API __declspec(dllexport)
#  else
#    define HPD_API __declspec(dllimport)
#  endif
#else
#  define HPD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hpd_tuple hpd_tuple;
typedef struct hpd_report hpd_report;

typedef enum hpd_status {
  HPD_OK = 0,
  HPD_ERR_INTERNAL = 1,
  HPD_ERR_PARSE = 2,
  HPD_ERR_NOT_NORMAL = 3,
  HPD_ERR_INSUFFICIENT_TRUNCATION = 4,
  HPD_ERR_SCHEMA = 5,
  HPD_ERR_LEADING_ZERO = 6,
  HPD_ERR_INVALID_ARGUMENT = 7,
  /* Every system solved but M1*M2 != I or a solution failed its recheck. */
  HPD_ERR_IDENTITY_FAILED = 8
} hpd_status;

typedef enum hpd_format {
  HPD_FORMAT_TEXT = 0,
  HPD_FORMAT_JSON = 1
} hpd_format;

HPD_API const char* hpd_version(void);
HPD_API const char* hpd_status_name(hpd_status status);
/* Process exit code used by the command line tool for a status:
 * 0 ok, 2 parse/schema/argument errors, 3 not normal,
 * 4 insufficient truncation, 1 anything else. */
HPD_API int hpd_exit_code(hpd_status status);
HPD_API const char* hpd_last_error(void);

/* Tuple document (JSON, see README). `len` is the byte length of `json`. */
HPD_API hpd_status hpd_tuple_parse(const char* json, size_t len, hpd_tuple** out);
HPD_API hpd_status hpd_tuple_random(uint64_t seed, int m, int num_coeffs, int height,
                                    hpd_tuple** out);
/* Serialized tuple document; release with hpd_string_free. */
HPD_API hpd_status hpd_tuple_to_json(const hpd_tuple* tuple, char** out);
HPD_API int hpd_tuple_m(const hpd_tuple* tuple);
/* Number of coefficients known for every series. */
HPD_API int hpd_tuple_num_coeffs(const hpd_tuple* tuple);
/* 16 hex digits; valid while the tuple lives. */
HPD_API const char* hpd_tuple_fingerprint(const hpd_tuple* tuple);
HPD_API void hpd_tuple_free(hpd_tuple* tuple);
HPD_API void hpd_string_free(char* str);

/* Commands. Each one stores a report in *out whenever out is not NULL, also
 * on failure: the output text (stdout material) and diagnostics (stderr
 * material). `k` / `s` < 0 selects every index 0..m. */
HPD_API hpd_status hpd_type1(const hpd_tuple* tuple, int n, int k, hpd_format format,
                             hpd_report** out);
HPD_API hpd_status hpd_type2(const hpd_tuple* tuple, int n, int s, hpd_format format,
                             hpd_report** out);
/* HPD_ERR_NOT_NORMAL when some index is not normal; the report is in the
 * output either way. */
HPD_API hpd_status hpd_normality(const hpd_tuple* tuple, int n, hpd_format format,
                                 hpd_report** out);
/* HPD_OK iff every solution verified and M1*M2 == I exactly. */
HPD_API hpd_status hpd_theorem1(const hpd_tuple* tuple, int n, hpd_format format,
                                hpd_report** out);

HPD_API hpd_status hpd_report_status(const hpd_report* report);
HPD_API const char* hpd_report_output(const hpd_report* report);
HPD_API const char* hpd_report_diagnostics(const hpd_report* report);
HPD_API void hpd_report_free(hpd_report* report);

#ifdef __cplusplus
}
#endif

#endif /* HPDUAL_H */
