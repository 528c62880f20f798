// Copyright 2026 The moduli-sep Authors
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


#include "moduli/report.hpp"

#include <algorithm>

#include <set>
#include <sstream>

namespace moduli {

namespace {

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DecimalBall to_decimal(const CertifiedReal& v, int digits) {
  // Widen the radius by the decimal rounding of the midpoint.
  CertifiedReal w = v;
  w.add_error(v.abs_upper() * Mag::exp2_up(1.0 - (digits - 1) * 3.3219));
  return {v.mid_string(digits), w.rad_string()};
}

DecimalBall to_decimal(const mpq_class& v, int digits) {
  if (v.get_den() == 1) return {v.get_num().get_str(), "0"};
  // Terminating decimals with at most `digits` fractional digits are exact.
  mpz_class den = v.get_den();
  long twos = 0, fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
  const long k = std::max(twos, fives);
  if (den == 1 && k <= digits) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
    mpz_class n = abs(v.get_num()) * scale / v.get_den();
    std::string s = n.get_str();
    if (static_cast<long>(s.size()) <= k) s.insert(0, k + 1 - s.size(), '0');
    s.insert(s.size() - k, ".");
    if (sgn(v) < 0) s.insert(0, "-");
    return {s, "0"};
  }
  CertifiedReal r = CertifiedReal::exact(v, 4 * digits + 64);
  return to_decimal(r, digits);
}

Json to_json(const DecimalBall& d) {
  return Json{{"mid", d.mid}, {"rad", d.rad}};
}

Json to_json(const CheckReport& r) {
  Json j;
  j["check_id"] = r.check_id;
  j["params"] = r.params;
  j["passed"] = r.passed;
  j["margin"] = to_json(r.margin);
  j["witness"] = r.witness;
  j["prec_bits"] = r.prec_bits;
  j["wall_ms"] = r.wall_ms;
  j["schema_version"] = kSchemaVersion;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

std::string to_ndjson_line(const CheckReport& r) { return to_json(r).dump(); }

std::string to_csv(const CheckReport& r, bool header) {
  std::ostringstream out;
  if (r.items.empty()) {
    if (header) out << "check_id,passed,margin_mid,margin_rad,prec_bits,wall_ms\n";
    out << csv_field(r.check_id) << "," << (r.passed ? "true" : "false") << ","
        << r.margin.mid << "," << r.margin.rad << "," << r.prec_bits << ","
        << r.wall_ms << "\n";
    return out.str();
  }
  // Column order: check_id, then keys in first-seen order.
  std::vector<std::string> keys;
  std::set<std::string> seen;
  for (const auto& item : r.items) {
    for (auto it = item.begin(); it != item.end(); ++it) {
      if (seen.insert(it.key()).second) keys.push_back(it.key());
    }
  }
  if (header) {
    out << "check_id";
    for (const auto& k : keys) out << "," << csv_field(k);
    out << "\n";
  }
  for (const auto& item : r.items) {
    out << csv_field(r.check_id);
    for (const auto& k : keys) {
      out << ",";
      if (item.contains(k)) out << csv_field(item.at(k));
    }
    out << "\n";
  }
  return out.str();
}

std::string to_human(const CheckReport& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS " : "FAIL ") << r.check_id;
  if (!r.params.empty()) out << " " << r.params.dump();
  out << "\n  margin  " << r.margin.mid << " +/- " << r.margin.rad;
  if (!r.witness.empty()) out << "\n  witness " << r.witness.dump();
  out << "\n  prec " << r.prec_bits << " bits, " << r.wall_ms << " ms";
  for (const auto& w : r.warnings) out << "\n  warning: " << w;
  out << "\n";
  return out.str();
}

}  // namespace moduli
