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

#ifndef HPDUAL_IO_HPP
#define HPDUAL_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hpdual/normality.hpp"
#include "hpdual/pipeline.hpp"
#include "hpdual/series_tuple.hpp"
#include "hpdual/type1.hpp"
#include "hpdual/type2.hpp"

namespace hpdual {

inline constexpr const char* kTupleSchemaVersion = "1";

/// Tuple document:
///
///   {"schema_version": "1", "m": 1, "coefficients": [["1", "0"], ["1", "1"]]}
///
/// coefficients[j][l] is the coefficient of z^-l in f_j as a string "p" or
/// "p/q". schema_version may be omitted. All series must have the same
/// length and a nonzero first coefficient.
///
/// Throws ParseError (malformed JSON or rational), Error(kSchema) and
/// Error(kLeadingZero).
SeriesTuple parse_tuple(std::string_view document);

/// Inverse of parse_tuple; rationals are written as strings.
std::string serialize_tuple(const SeriesTuple& tuple);

enum class Format { kText, kJson };

std::string format_type1(const SeriesTuple& f, const std::vector<Type1Solution>& sols, Format fmt);
std::string format_type2(const SeriesTuple& f, const std::vector<Type2Solution>& sols, Format fmt);
std::string format_normality(const NormalityReport& report, Format fmt);
std::string format_theorem1(const Theorem1Result& result, Format fmt);
/// Error description; NotNormal errors carry their verdict.
std::string format_error(const std::exception& e, Format fmt);

}  // namespace hpdual

#endif  // HPDUAL_IO_HPP
