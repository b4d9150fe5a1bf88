// Copyright 2026 The netident Authors
//
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

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "netident/model.hpp"
#include "netident/pseudotree.hpp"

namespace netident {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitInvalidModel = 2,
  kExitNotIdentifiable = 3,
  kExitUnsatisfiable = 4,
  kExitOracleBudget = 5,
  kExitOracleDisagreement = 6,
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

/// DOT rendering of the extended graph. Edges of tree k carry the k-th of
/// |c| evenly spaced hues; edges outside the covering are dashed and
/// uncolored. Noise vertices are drawn as boxes.
std::string covering_to_dot(const ExtendedGraph& eg, const Covering& c);

/// Flattened "path: value" lines, one per scalar, in document order.
std::string report_to_text(const nlohmann::ordered_json& report);

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or to --out), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netident
