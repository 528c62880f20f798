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


#pragma once

#include <iosfwd>
#include <string>

#include "moduli/report.hpp"

namespace moduli::cli {

// Process exit codes.
enum ExitCode : int {
  kPass = 0,
  kFail = 1,
  kPrecision = 2,
  kUsage = 64,
  kUnclassified = 65,
};

// Runs `msep` with the given arguments (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

// Re-derives the printed series and elliptic constants and compares each to
// its printed form. Items carry group, name, printed, rule and the computed
// enclosure. `group` is one of series, elliptic, y0, kappa_lambda, or empty
// for all of them.
CheckReport verify_constants(long prec_bits = 128, const std::string& group = "");

}  // namespace moduli::cli
