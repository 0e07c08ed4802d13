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

// Command line front end; talks to the library only through the C API.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hpdual.h"

namespace {

constexpr int kUsageExit = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Loads the tuple or reports why not; returns the exit code on failure.
int load_tuple(const std::string& path, hpd_tuple** tuple) {
  std::string doc;
  if (!read_file(path, doc)) {
    std::cerr << "cannot read " << path << "\n";
    return kUsageExit;
  }
  const hpd_status st = hpd_tuple_parse(doc.data(), doc.size(), tuple);
  if (st != HPD_OK) {
    std::cerr << hpd_status_name(st) << ": " << hpd_last_error() << "\n";
    return hpd_exit_code(st);
  }
  return 0;
}

int finish(hpd_status st, hpd_report* report) {
  if (report) {
    std::cout << hpd_report_output(report);
    std::cerr << hpd_report_diagnostics(report);
    hpd_report_free(report);
  } else if (st != HPD_OK) {
    std::cerr << hpd_status_name(st) << ": " << hpd_last_error() << "\n";
  }
  return hpd_exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermite-Pade polynomials at infinity and the M1*M2 = I duality check"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hpd_version()));

  std::string format = "text";
  std::string input;
  int n = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Tuple document (JSON)")->required();
    sub->add_option("--n", n, "Degree parameter n >= 1")->required()->check(CLI::PositiveNumber);
    add_common(sub);
  };

  std::uint64_t seed = 0;
  int m = 1;
  int coeffs = 1;
  int height = 10;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a seeded random tuple document");
  gen->add_option("--seed", seed, "RNG seed")->required();
  gen->add_option("--m", m, "Number of series minus one")->required()->check(CLI::PositiveNumber);
  gen->add_option("--coeffs", coeffs, "Coefficients per series")->required()->check(CLI::PositiveNumber);
  gen->add_option("--height", height, "Bound on numerators and denominators")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--out", out_path, "Output file (stdout if omitted)");
  add_common(gen);

  int k = -1;
  auto* type1 = app.add_subcommand("type1", "Type I polynomials for the indices n_k");
  add_input(type1);
  type1->add_option("--k", k, "Single index k (all k if omitted)")->check(CLI::NonNegativeNumber);

  int s = -1;
  auto* type2 = app.add_subcommand("type2", "Type II polynomials for the indices d_s");
  add_input(type2);
  type2->add_option("--s", s, "Single index s (all s if omitted)")->check(CLI::NonNegativeNumber);

  auto* normality = app.add_subcommand("normality", "Normality of the 2(m+1) indices used at n");
  add_input(normality);

  auto* theorem1 = app.add_subcommand("theorem1", "Build M1 and M2 and check M1*M2 == I");
  add_input(theorem1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageExit;
  }

  const hpd_format fmt = format == "json" ? HPD_FORMAT_JSON : HPD_FORMAT_TEXT;

  if (*gen) {
    hpd_tuple* tuple = nullptr;
    hpd_status st = hpd_tuple_random(seed, m, coeffs, height, &tuple);
    if (st != HPD_OK) return finish(st, nullptr);
    char* doc = nullptr;
    st = hpd_tuple_to_json(tuple, &doc);
    if (st != HPD_OK) {
      hpd_tuple_free(tuple);
      return finish(st, nullptr);
    }
    int rc = 0;
    if (out_path.empty()) {
      std::cout << doc;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      out << doc;
      if (!out) {
        std::cerr << "cannot write " << out_path << "\n";
        rc = 1;
      } else if (fmt == HPD_FORMAT_JSON) {
        std::cout << "{\"out\": \"" << out_path << "\", \"fingerprint\": \""
                  << hpd_tuple_fingerprint(tuple) << "\"}\n";
      } else {
        std::cout << "wrote " << out_path << " (m=" << hpd_tuple_m(tuple)
                  << ", coefficients=" << hpd_tuple_num_coeffs(tuple)
                  << ", fingerprint " << hpd_tuple_fingerprint(tuple) << ")\n";
      }
    }
    hpd_string_free(doc);
    hpd_tuple_free(tuple);
    return rc;
  }

  hpd_tuple* tuple = nullptr;
  if (const int rc = load_tuple(input, &tuple); rc != 0) return rc;

  hpd_report* report = nullptr;
  hpd_status st = HPD_OK;
  if (*type1) {
    st = hpd_type1(tuple, n, k, fmt, &report);
  } else if (*type2) {
    st = hpd_type2(tuple, n, s, fmt, &report);
  } else if (*normality) {
    st = hpd_normality(tuple, n, fmt, &report);
  } else {
    st = hpd_theorem1(tuple, n, fmt, &report);
  }
  hpd_tuple_free(tuple);
  return finish(st, report);
}
