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

// Uniform check records and their JSON, CSV and human renderings.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "moduli/ball.hpp"

namespace moduli {

inline constexpr const char* kSchemaVersion = "1.0.0";

using Json = nlohmann::ordered_json;

// A certified number rendered as decimal strings.
struct DecimalBall {
  std::string mid;
  std::string rad;
};
DecimalBall to_decimal(const CertifiedReal& v, int digits = 20);
DecimalBall to_decimal(const mpq_class& v, int digits = 20);
Json to_json(const DecimalBall& d);

struct CheckReport {
  std::string check_id;
  Json params = Json::object();
  bool passed = false;
  DecimalBall margin;
  Json witness = Json::object();
  long prec_bits = 0;
  long wall_ms = 0;
  std::vector<std::string> warnings;
  // Per-item margins, emitted as CSV rows.
  std::vector<Json> items;
};

Json to_json(const CheckReport& r);
// One NDJSON line (no trailing newline).
std::string to_ndjson_line(const CheckReport& r);
// Header plus one row per item; a report without items yields one summary
// row.
std::string to_csv(const CheckReport& r, bool header = true);
std::string to_human(const CheckReport& r);

}  // namespace moduli
