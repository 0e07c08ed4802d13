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

#include "hpdual/io.hpp"

#include <sstream>
#include <utility>

#include "hpdual/error.hpp"
#include "json.hpp"

namespace hpdual {

using Json = nlohmann::ordered_json;

namespace {

Error schema_error(const std::string& what) { return Error(ErrorCode::kSchema, "schema error: " + what); }

Json rational_list(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

Json poly_json(const Polynomial& p) { return rational_list(p.coeffs()); }

Json polys_json(const std::vector<Polynomial>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(poly_json(p));
  return out;
}

Json order_json(const ResidualOrder& o) {
  return Json{{"order", o.order}, {"lower_bound", o.lower_bound}};
}

Json matrix_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(poly_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json checks_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return Json{{"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json verdict_json(const Verdict& v) {
  Json out{{"kind", verdict_kind(v)}};
  if (const auto* s = std::get_if<verdict::Singular>(&v)) {
    out["rank"] = s->rank;
    out["size"] = s->size;
    out["kernel_witness"] = polys_json(s->kernel_witness);
  } else if (const auto* d = std::get_if<verdict::DegreeDrop>(&v)) {
    out["polynomial"] = d->polynomial;
    out["degree"] = d->degree ? Json(*d->degree) : Json(nullptr);
    out["expected"] = d->expected;
  } else if (const auto* o = std::get_if<verdict::OrderShortfall>(&v)) {
    out["pair"] = o->pair;
    out["achieved"] = order_json(o->achieved);
    out["required"] = o->required;
  }
  out["description"] = describe(v);
  return out;
}

std::string index_string(const std::vector<int>& idx) {
  std::string out = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) out += (i ? ", " : "") + std::to_string(idx[i]);
  return out + ")";
}

std::string matrix_string(const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.dim(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.dim(); ++c) out += (c ? ", " : "") + m(r, c).to_string();
    out += "]";
  }
  return out + "]";
}

void text_checks(std::ostringstream& os, const VerificationReport& r) {
  os << "  verification: " << (r.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    if (!c.passed) os << "    failed " << c.name << ": " << c.detail << "\n";
  }
}

}  // namespace

SeriesTuple parse_tuple(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(static_cast<long>(e.byte), e.what());
  }
  if (!doc.is_object()) throw schema_error("document must be a JSON object");
  if (doc.contains("schema_version")) {
    const auto& v = doc["schema_version"];
    if (!v.is_string() || v.get<std::string>() != kTupleSchemaVersion) {
      throw schema_error(std::string("unsupported schema_version, expected \"") +
                         kTupleSchemaVersion + "\"");
    }
  }
  if (!doc.contains("m") || !doc["m"].is_number_integer()) {
    throw schema_error("\"m\" must be an integer");
  }
  const long m = doc["m"].get<long>();
  if (m < 1) throw schema_error("\"m\" must be at least 1");
  if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
    throw schema_error("\"coefficients\" must be an array");
  }
  const auto& coeffs = doc["coefficients"];
  if (static_cast<long>(coeffs.size()) != m + 1) {
    throw schema_error("\"coefficients\" must hold m+1 = " + std::to_string(m + 1) + " series");
  }
  std::vector<LaurentSeries> series;
  std::size_t length = 0;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto& list = coeffs[j];
    if (!list.is_array() || list.empty()) {
      throw schema_error("coefficients[" + std::to_string(j) + "] must be a nonempty array");
    }
    if (j == 0) length = list.size();
    if (list.size() != length) throw schema_error("all series must have the same length");
    std::vector<Rational> c;
    for (std::size_t l = 0; l < list.size(); ++l) {
      const std::string where = "coefficients[" + std::to_string(j) + "][" + std::to_string(l) + "]";
      if (!list[l].is_string()) throw schema_error(where + " must be a string");
      auto r = Rational::parse(list[l].get<std::string>());
      if (!r) throw ParseError(-1, where + ": \"" + list[l].get<std::string>() + "\" is not a rational");
      c.push_back(std::move(*r));
    }
    if (c.front().is_zero()) {
      throw Error(ErrorCode::kLeadingZero, "f_" + std::to_string(j) + "(inf) = 0: first coefficient is zero");
    }
    series.push_back(LaurentSeries::at_infinity(std::move(c)));
  }
  return SeriesTuple(std::move(series));
}

std::string serialize_tuple(const SeriesTuple& tuple) {
  Json coeffs = Json::array();
  for (const auto& f : tuple.series()) {
    std::vector<Rational> c;
    for (int p = 0; p >= f.known_through(); --p) c.push_back(f.coeff(p));
    coeffs.push_back(rational_list(c));
  }
  Json doc{{"schema_version", kTupleSchemaVersion}, {"m", tuple.m()}, {"coefficients", std::move(coeffs)}};
  return doc.dump(2) + "\n";
}

std::string format_type1(const SeriesTuple& f, const std::vector<Type1Solution>& sols, Format fmt) {
  if (fmt == Format::kJson) {
    Json list = Json::array();
    for (const auto& s : sols) {
      list.push_back(Json{{"k", s.index.k},
                          {"multi_index", s.index.multi_index()},
                          {"Q", polys_json(s.q)},
                          {"residual_order", order_json(s.residual_order)},
                          {"required_order", s.index.required_order()},
                          {"verification", checks_json(verify_type1(f, s))}});
    }
    Json doc{{"kind", "type1"}, {"m", f.m()}, {"n", sols.empty() ? 0 : sols.front().index.n},
             {"tuple", f.fingerprint_hex()}, {"solutions", std::move(list)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& s : sols) {
    os << "type I  m=" << s.index.m << " n=" << s.index.n << " k=" << s.index.k
       << "  multi-index " << index_string(s.index.multi_index()) << "\n";
    for (std::size_t j = 0; j < s.q.size(); ++j) os << "  Q_" << j << " = " << s.q[j] << "\n";
    os << "  residual order " << s.residual_order.to_string() << " (required "
       << s.index.required_order() << ")\n";
    text_checks(os, verify_type1(f, s));
  }
  return os.str();
}

std::string format_type2(const SeriesTuple& f, const std::vector<Type2Solution>& sols, Format fmt) {
  if (fmt == Format::kJson) {
    Json list = Json::array();
    for (const auto& s : sols) {
      Json orders = Json::array();
      int i = 0;
      for (int j = 0; j <= s.index.m; ++j) {
        if (j == s.index.s) continue;
        Json o = order_json(s.residual_orders[static_cast<std::size_t>(i++)]);
        o["j"] = j;
        orders.push_back(std::move(o));
      }
      list.push_back(Json{{"s", s.index.s},
                          {"multi_index", s.index.multi_index()},
                          {"P", polys_json(s.p)},
                          {"residual_orders", std::move(orders)},
                          {"required_order", s.index.required_order()},
                          {"verification", checks_json(verify_type2(f, s))}});
    }
    Json doc{{"kind", "type2"}, {"m", f.m()}, {"n", sols.empty() ? 0 : sols.front().index.n},
             {"tuple", f.fingerprint_hex()}, {"solutions", std::move(list)}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& s : sols) {
    os << "type II  m=" << s.index.m << " n=" << s.index.n << " s=" << s.index.s
       << "  multi-index " << index_string(s.index.multi_index()) << "\n";
    for (std::size_t j = 0; j < s.p.size(); ++j) os << "  P_" << j << " = " << s.p[j] << "\n";
    int i = 0;
    for (int j = 0; j <= s.index.m; ++j) {
      if (j == s.index.s) continue;
      os << "  residual order (j=" << j << ") "
         << s.residual_orders[static_cast<std::size_t>(i++)].to_string() << " (required "
         << s.index.required_order() << ")\n";
    }
    text_checks(os, verify_type2(f, s));
  }
  return os.str();
}

std::string format_normality(const NormalityReport& report, Format fmt) {
  if (fmt == Format::kJson) {
    auto entries = [](const std::vector<IndexVerdict>& vs, const char* slot) {
      Json out = Json::array();
      for (const auto& v : vs) {
        out.push_back(Json{{slot, v.slot}, {"multi_index", v.multi_index}, {"verdict", verdict_json(v.verdict)}});
      }
      return out;
    };
    Json doc{{"kind", "normality"},
             {"m", report.m},
             {"n", report.n},
             {"general_position_at_n", report.general_position_at_n()},
             {"type1", entries(report.type1, "k")},
             {"type2", entries(report.type2, "s")}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "normality  m=" << report.m << " n=" << report.n << "\n";
  for (const auto& v : report.type1) {
    os << "  type I  k=" << v.slot << " " << index_string(v.multi_index) << ": " << describe(v.verdict) << "\n";
  }
  for (const auto& v : report.type2) {
    os << "  type II s=" << v.slot << " " << index_string(v.multi_index) << ": " << describe(v.verdict) << "\n";
  }
  os << "general-position-at-n: " << (report.general_position_at_n() ? "true" : "false") << "\n";
  return os.str();
}

std::string format_theorem1(const Theorem1Result& r, Format fmt) {
  const auto& d = r.duality;
  if (fmt == Format::kJson) {
    Json entries = Json::array();
    for (const auto& e : d.entries) {
      entries.push_back(Json{{"row", e.row}, {"col", e.col}, {"value", poly_json(e.value)},
                             {"expected", e.expected.to_string()}, {"ok", e.ok}, {"detail", e.detail}});
    }
    Json t1 = Json::array();
    for (std::size_t i = 0; i < r.type1.size(); ++i) {
      t1.push_back(Json{{"k", r.type1[i].index.k}, {"Q", polys_json(r.type1[i].q)},
                        {"verification", checks_json(r.type1_checks[i])}});
    }
    Json t2 = Json::array();
    for (std::size_t i = 0; i < r.type2.size(); ++i) {
      t2.push_back(Json{{"s", r.type2[i].index.s}, {"P", polys_json(r.type2[i].p)},
                        {"verification", checks_json(r.type2_checks[i])}});
    }
    Json doc{{"kind", "theorem1"},
             {"m", static_cast<int>(r.m1.dim()) - 1},
             {"n", r.n},
             {"type1", std::move(t1)},
             {"type2", std::move(t2)},
             {"M1", matrix_json(r.m1)},
             {"M2", matrix_json(r.m2)},
             {"product", matrix_json(d.product)},
             {"det_M1", poly_json(r.det_m1)},
             {"det_M2", poly_json(r.det_m2)},
             {"entries", std::move(entries)},
             {"identity", d.identity},
             {"holds", r.holds()}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "theorem1  m=" << static_cast<int>(r.m1.dim()) - 1 << " n=" << r.n << "\n";
  for (std::size_t i = 0; i < r.type1.size(); ++i) {
    os << "type I  k=" << r.type1[i].index.k << ":";
    for (std::size_t j = 0; j < r.type1[i].q.size(); ++j) os << "  Q_" << j << " = " << r.type1[i].q[j] << ";";
    os << (r.type1_checks[i].passed() ? " verified" : " VERIFICATION FAILED") << "\n";
  }
  for (std::size_t i = 0; i < r.type2.size(); ++i) {
    os << "type II s=" << r.type2[i].index.s << ":";
    for (std::size_t j = 0; j < r.type2[i].p.size(); ++j) os << "  P_" << j << " = " << r.type2[i].p[j] << ";";
    os << (r.type2_checks[i].passed() ? " verified" : " VERIFICATION FAILED") << "\n";
  }
  os << "M1 = " << matrix_string(r.m1) << "\n";
  os << "M2 = " << matrix_string(r.m2) << "\n";
  os << "M1*M2 = " << matrix_string(d.product) << "\n";
  os << "det M1 = " << r.det_m1 << "\n";
  os << "det M2 = " << r.det_m2 << "\n";
  for (const auto& e : d.offending()) {
    os << "entry (" << e.row << "," << e.col << ") = " << e.value << ": " << e.detail << "\n";
  }
  os << "M1*M2 == I: " << (d.identity ? "true" : "false") << "\n";
  return os.str();
}

std::string format_error(const std::exception& e, Format fmt) {
  const auto* err = dynamic_cast<const Error*>(&e);
  const char* kind = err ? to_string(err->code()) : "Internal";
  if (fmt == Format::kJson) {
    Json doc{{"error", kind}, {"message", e.what()}};
    if (const auto* nn = dynamic_cast<const NotNormal*>(&e)) doc["verdict"] = verdict_json(nn->verdict());
    if (const auto* it = dynamic_cast<const InsufficientTruncation*>(&e)) {
      doc["required_through"] = it->required();
      doc["available_through"] = it->available();
    }
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) doc["position"] = pe->position();
    return doc.dump(2) + "\n";
  }
  return std::string(kind) + ": " + e.what() + "\n";
}

}  // namespace hpdual
