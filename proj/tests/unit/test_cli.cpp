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


#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using namespace moduli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "msep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> records(const std::string& ndjson) {
  std::vector<Json> out;
  std::istringstream in(ndjson);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("usage errors exit 64") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"verify"}).code == cli::kUsage);
  CHECK(run({"verify", "nonsense"}).code == cli::kUsage);
  CHECK(run({"verify", "table1", "--k", "9"}).code == cli::kUsage);
  CHECK(run({"verify", "table1", "--k", "4"}).code == cli::kUsage);
  CHECK(run({"verify", "cderiv", "--X", "5000"}).code == cli::kUsage);
  CHECK(run({"--emit", "xml", "verify", "bad-list"}).code == cli::kUsage);
  CHECK(run({"--prec", "512", "--prec-cap", "256", "verify", "bad-list"}).code == cli::kUsage);
  CHECK(run({"hilbert", "--dx", "-5"}).code == cli::kUsage);
  CHECK(run({"classify", "--dx", "-15", "--dy", "-20", "--alpha", "0"}).code == cli::kUsage);
  CHECK(run({"classify", "--dx", "-15", "--dy", "-20", "--alpha", "x"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("out-of-classification pair exits 65") {
  auto r = run({"verify", "cross-pairs", "--dx", "-96", "--dy", "-100"});
  CHECK(r.code == cli::kUnclassified);
  CHECK(r.err.find("-100") != std::string::npos);
}

TEST_CASE("precision exhaustion exits 2") {
  auto r = run({"--prec", "32", "--prec-cap", "40", "orbit", "--dx", "-4003"});
  CHECK(r.code == cli::kPrecision);
}

TEST_CASE("failing assertion exits 1") {
  auto r = run({"--emit", "json", "verify", "separation", "--X", "30", "--scale", "1000000"});
  CHECK(r.code == cli::kFail);
  auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["passed"] == false);
}

TEST_CASE("classify") {
  auto r = run({"--emit", "json", "classify", "--dx", "-15", "--dy", "-20", "--alpha", "3/2"});
  CHECK(r.code == 0);
  auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["witness"]["verdict"] == "Generates");
  CHECK(recs[0]["witness"]["certified_distinct"] == true);
  r = run({"--emit", "json", "classify", "--dx", "-15", "--dy", "-20", "--alpha=-1323/8704"});
  CHECK(r.code == 0);
  CHECK(records(r.out)[0]["witness"]["verdict"] == "ExceptionExampleQuad");
  r = run({"--emit", "json", "classify", "--dx", "-15", "--dy", "-15", "--alpha", "1"});
  CHECK(records(r.out)[0]["witness"]["verdict"] == "SumDiffCase");
  CHECK(records(r.out)[0]["witness"]["subfield_index"] == 2);
}

TEST_CASE("bad list and formats") {
  auto j = run({"--emit", "json", "verify", "bad-list"});
  CHECK(j.code == 0);
  auto recs = records(j.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["schema_version"] == "1.0.0");
  CHECK(recs[0]["witness"]["count"] == 38);
  CHECK(recs[0]["witness"]["two_elementary_count"] == 16);
  auto c = run({"--emit", "csv", "verify", "bad-list"});
  CHECK(c.out.rfind("check_id,disc,class_number,two_elementary\n", 0) == 0);
  auto h = run({"verify", "bad-list"});
  CHECK(h.out.rfind("PASS primel.bad_list", 0) == 0);
}

TEST_CASE("table rows and explicit bounds") {
  auto r = run({"--emit", "json", "--workers", "1", "verify", "table1", "--k", "1"});
  CHECK(r.code == 0);
  auto recs = records(r.out);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0]["check_id"] == "separation.minima_k1");
  r = run({"--emit", "json", "verify", "table1", "--X", "60"});
  CHECK(r.code == 0);
  CHECK(records(r.out).size() == 2);
}

TEST_CASE("results do not depend on the worker count") {
  auto a = run({"--emit", "json", "--workers", "1", "verify", "separation", "--X", "120"});
  auto b = run({"--emit", "json", "--workers", "3", "verify", "separation", "--X", "120"});
  auto ra = records(a.out)[0], rb = records(b.out)[0];
  ra.erase("wall_ms");
  rb.erase("wall_ms");
  CHECK(ra == rb);
  setenv("MODULI_SEP_WORKERS", "2", 1);
  auto c = run({"--emit", "json", "verify", "separation", "--X", "120"});
  unsetenv("MODULI_SEP_WORKERS");
  auto rc = records(c.out)[0];
  rc.erase("wall_ms");
  CHECK(ra == rc);
}

TEST_CASE("reports go to --out") {
  const std::string path = "msep_cli_test_out.ndjson";
  auto r = run({"--emit", "json", "--out", path, "hilbert", "--dx", "-23"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  REQUIRE(std::getline(in, line));
  auto j = Json::parse(line);
  CHECK(j["witness"]["polynomial"] == "X^3 + 3491750*X^2 - 5151296875*X + 12771880859375");
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("constants") {
  auto rep = cli::verify_constants(128);
  CHECK(rep.passed);
  CHECK(rep.items.size() == 18);
  for (const auto& it : rep.items) CHECK_MESSAGE(it["passed"] == true, it["name"]);
}
