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

#include "hpdual.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "hpdual/error.hpp"
#include "hpdual/io.hpp"
#include "hpdual/normality.hpp"
#include "hpdual/pipeline.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"
#include "hpdual/verdict.hpp"
#include "json.hpp"

struct hpd_tuple {
  hpdual::SeriesTuple tuple;
  std::string fingerprint;
};

struct hpd_report {
  hpd_status status = HPD_OK;
  std::string output;
  std::string diagnostics;
};

namespace {

thread_local std::string last_error;

hpd_status status_of(hpdual::ErrorCode code) {
  using hpdual::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return HPD_ERR_PARSE;
    case ErrorCode::kSchema: return HPD_ERR_SCHEMA;
    case ErrorCode::kLeadingZero: return HPD_ERR_LEADING_ZERO;
    case ErrorCode::kInsufficientTruncation: return HPD_ERR_INSUFFICIENT_TRUNCATION;
    case ErrorCode::kNotNormal: return HPD_ERR_NOT_NORMAL;
    case ErrorCode::kInvalidArgument: return HPD_ERR_INVALID_ARGUMENT;
    case ErrorCode::kMixedInputs:
    case ErrorCode::kDimensionMismatch:
    case ErrorCode::kInternal: return HPD_ERR_INTERNAL;
  }
  return HPD_ERR_INTERNAL;
}

hpdual::Format format_of(hpd_format f) {
  return f == HPD_FORMAT_JSON ? hpdual::Format::kJson : hpdual::Format::kText;
}

hpd_status fail(hpd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body` (which fills the report) and converts exceptions into a
// status plus diagnostics.
template <class Body>
hpd_status run_command(const hpd_tuple* tuple, hpd_format format, hpd_report** out, Body body) {
  if (out) *out = nullptr;
  if (!tuple) return fail(HPD_ERR_INVALID_ARGUMENT, "null tuple");
  hpd_report* report = new (std::nothrow) hpd_report;
  if (!report) return fail(HPD_ERR_INTERNAL, "out of memory");
  const hpdual::Format fmt = format_of(format);
  try {
    report->status = body(*report, fmt);
    last_error.clear();
    if (report->status != HPD_OK) last_error = report->diagnostics;
  } catch (const hpdual::Error& e) {
    report->status = status_of(e.code());
    report->diagnostics = hpdual::format_error(e, fmt);
    last_error = e.what();
  } catch (const std::exception& e) {
    report->status = HPD_ERR_INTERNAL;
    report->diagnostics = hpdual::format_error(e, fmt);
    last_error = e.what();
  }
  const hpd_status status = report->status;
  if (out) {
    *out = report;
  } else {
    delete report;
  }
  return status;
}

void require_positive_n(int n) {
  if (n < 1) throw hpdual::Error(hpdual::ErrorCode::kInvalidArgument, "n must be at least 1");
}

}  // namespace

extern "C" {

const char* hpd_version(void) { return "1.0.0"; }

const char* hpd_status_name(hpd_status status) {
  switch (status) {
    case HPD_OK: return "ok";
    case HPD_ERR_INTERNAL: return "internal";
    case HPD_ERR_PARSE: return "parse";
    case HPD_ERR_NOT_NORMAL: return "not-normal";
    case HPD_ERR_INSUFFICIENT_TRUNCATION: return "insufficient-truncation";
    case HPD_ERR_SCHEMA: return "schema";
    case HPD_ERR_LEADING_ZERO: return "leading-zero";
    case HPD_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HPD_ERR_IDENTITY_FAILED: return "identity-failed";
  }
  return "unknown";
}

int hpd_exit_code(hpd_status status) {
  switch (status) {
    case HPD_OK: return 0;
    case HPD_ERR_PARSE:
    case HPD_ERR_SCHEMA:
    case HPD_ERR_LEADING_ZERO:
    case HPD_ERR_INVALID_ARGUMENT: return 2;
    case HPD_ERR_NOT_NORMAL: return 3;
    case HPD_ERR_INSUFFICIENT_TRUNCATION: return 4;
    default: return 1;
  }
}

const char* hpd_last_error(void) { return last_error.c_str(); }

hpd_status hpd_tuple_parse(const char* json, size_t len, hpd_tuple** out) {
  if (!out) return fail(HPD_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  if (!json) return fail(HPD_ERR_INVALID_ARGUMENT, "null document");
  try {
    hpdual::SeriesTuple t = hpdual::parse_tuple(std::string_view(json, len));
    std::string fp = t.fingerprint_hex();
    *out = new hpd_tuple{std::move(t), std::move(fp)};
    return HPD_OK;
  } catch (const hpdual::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(HPD_ERR_INTERNAL, e.what());
  }
}

hpd_status hpd_tuple_random(uint64_t seed, int m, int num_coeffs, int height, hpd_tuple** out) {
  if (!out) return fail(HPD_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  try {
    hpdual::SeriesTuple t = hpdual::random_tuple(seed, m, num_coeffs, height);
    std::string fp = t.fingerprint_hex();
    *out = new hpd_tuple{std::move(t), std::move(fp)};
    return HPD_OK;
  } catch (const hpdual::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail(HPD_ERR_INTERNAL, e.what());
  }
}

hpd_status hpd_tuple_to_json(const hpd_tuple* tuple, char** out) {
  if (!tuple || !out) return fail(HPD_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  try {
    const std::string doc = hpdual::serialize_tuple(tuple->tuple);
    char* buf = new char[doc.size() + 1];
    std::memcpy(buf, doc.c_str(), doc.size() + 1);
    *out = buf;
    return HPD_OK;
  } catch (const std::exception& e) {
    return fail(HPD_ERR_INTERNAL, e.what());
  }
}

int hpd_tuple_m(const hpd_tuple* tuple) { return tuple ? tuple->tuple.m() : -1; }

int hpd_tuple_num_coeffs(const hpd_tuple* tuple) {
  return tuple ? 1 - tuple->tuple.known_through() : -1;
}

const char* hpd_tuple_fingerprint(const hpd_tuple* tuple) {
  return tuple ? tuple->fingerprint.c_str() : "";
}

void hpd_tuple_free(hpd_tuple* tuple) { delete tuple; }

void hpd_string_free(char* str) { delete[] str; }

hpd_status hpd_type1(const hpd_tuple* tuple, int n, int k, hpd_format format, hpd_report** out) {
  return run_command(tuple, format, out, [&](hpd_report& r, hpdual::Format fmt) {
    require_positive_n(n);
    const auto& f = tuple->tuple;
    if (k > f.m()) throw hpdual::Error(hpdual::ErrorCode::kInvalidArgument, "k must be in [0, m]");
    std::vector<hpdual::Type1Solution> sols;
    if (k < 0) {
      sols = hpdual::solve_type1_all(f, n);
    } else {
      sols.push_back(hpdual::solve_type1(f, {n, k, f.m()}));
    }
    r.output = hpdual::format_type1(f, sols, fmt);
    return HPD_OK;
  });
}

hpd_status hpd_type2(const hpd_tuple* tuple, int n, int s, hpd_format format, hpd_report** out) {
  return run_command(tuple, format, out, [&](hpd_report& r, hpdual::Format fmt) {
    require_positive_n(n);
    const auto& f = tuple->tuple;
    if (s > f.m()) throw hpdual::Error(hpdual::ErrorCode::kInvalidArgument, "s must be in [0, m]");
    std::vector<hpdual::Type2Solution> sols;
    if (s < 0) {
      sols = hpdual::solve_type2_all(f, n);
    } else {
      sols.push_back(hpdual::solve_type2(f, {n, s, f.m()}));
    }
    r.output = hpdual::format_type2(f, sols, fmt);
    return HPD_OK;
  });
}

hpd_status hpd_normality(const hpd_tuple* tuple, int n, hpd_format format, hpd_report** out) {
  return run_command(tuple, format, out, [&](hpd_report& r, hpdual::Format fmt) {
    require_positive_n(n);
    const auto report = hpdual::check_general_position(tuple->tuple, n);
    r.output = hpdual::format_normality(report, fmt);
    if (report.general_position_at_n()) return HPD_OK;
    r.diagnostics = "tuple is not in general position at n=" + std::to_string(n) + "\n";
    return HPD_ERR_NOT_NORMAL;
  });
}

hpd_status hpd_theorem1(const hpd_tuple* tuple, int n, hpd_format format, hpd_report** out) {
  return run_command(tuple, format, out, [&](hpd_report& r, hpdual::Format fmt) {
    require_positive_n(n);
    const auto& f = tuple->tuple;
    try {
      const auto result = hpdual::run_theorem1(f, n);
      r.output = hpdual::format_theorem1(result, fmt);
      if (result.holds()) return HPD_OK;
      r.diagnostics = "M1*M2 is not the identity or a solution failed its recheck\n";
      return HPD_ERR_IDENTITY_FAILED;
    } catch (const hpdual::NotNormal& e) {
      // Full picture of which indices fail, not just the first one hit.
      const auto normality = hpdual::check_general_position(f, n);
      if (fmt == hpdual::Format::kJson) {
        auto doc = nlohmann::ordered_json::parse(hpdual::format_error(e, fmt));
        doc["normality"] = nlohmann::ordered_json::parse(hpdual::format_normality(normality, fmt));
        r.diagnostics = doc.dump(2) + "\n";
      } else {
        r.diagnostics = hpdual::format_error(e, fmt) + hpdual::format_normality(normality, fmt);
      }
      return HPD_ERR_NOT_NORMAL;
    }
  });
}

hpd_status hpd_report_status(const hpd_report* report) {
  return report ? report->status : HPD_ERR_INVALID_ARGUMENT;
}

const char* hpd_report_output(const hpd_report* report) { return report ? report->output.c_str() : ""; }

const char* hpd_report_diagnostics(const hpd_report* report) {
  return report ? report->diagnostics.c_str() : "";
}

void hpd_report_free(hpd_report* report) { delete report; }

}  // extern "C"
