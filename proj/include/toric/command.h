// Copyright 2026 The toric-entropy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TORIC_COMMAND_H
#define TORIC_COMMAND_H

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "toric/oracle.h"

namespace toric {

enum class Verb { kInfo, kEntropy, kSweep, kOracle, kVerify, kDegeneracy };
enum class OutputFormat { kJson, kCsv };

struct TorusSource {
    size_t k;
};
struct FileSource {
    std::string path;
};

struct Command {
    Verb verb = Verb::kInfo;
    std::variant<TorusSource, FileSource> surface = TorusSource{2};
    /// Region DSL; required by `entropy` and `oracle`.
    std::string region_spec;
    /// `oracle` only; defaults to the basis state |xi_00>.
    std::optional<SectorAmplitudes> amplitudes;
    /// `sweep` only; empty means the squares 1x1 .. (k-1)x(k-1).
    std::vector<std::pair<size_t, size_t>> sizes;
    /// Defaults to CSV for `sweep` and JSON for everything else.
    std::optional<OutputFormat> format;
    OracleLimits limits;
};

enum ExitStatus : int {
    kExitOk = 0,
    kExitArgumentError = 1,
    kExitResourceLimit = 2,
    kExitOracleMismatch = 3,
};

/// Executes one command, writing a single JSON object (or CSV table) to `out`.
/// Errors are reported on `out` as {"error": ..., "detail": ...}.
int run(const Command &c, std::ostream &out);

/// Parses `toric_entropy <verb> [flags]` and runs it. `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out);

/// "a00,a01,a10,a11", each entry `re` or `re:im`.
SectorAmplitudes parse_amplitudes(const std::string &text);
/// "1x1,2x3,...".
std::vector<std::pair<size_t, size_t>> parse_sizes(const std::string &text);

/// Rounds to 12 significant digits so printed JSON is stable across platforms.
double round_for_output(double value);

}  // namespace toric

#endif
