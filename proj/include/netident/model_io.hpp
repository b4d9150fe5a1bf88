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

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "netident/model.hpp"

namespace netident {

/// Malformed JSON, unknown keys, wrong types, or indices outside 1..L.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a model document:
///
///   {"schema": 1, "L": 3,
///    "modules": [{"from": 1, "to": 2, "status": "param"}],
///    "noise": {"p": 1, "columns": [[{"row": 2, "status": "param"}]]},
///    "excited": [1], "strictly_proper": true,
///    "feedthrough_edges": [[1, 2]]}
///
/// Only "L" and "modules" are required. Semantic problems (self-loops,
/// noise rules, algebraic loops) are left to validate().
ModelSet parse_model(const nlohmann::json& doc);
ModelSet parse_model_text(std::string_view text);

/// Canonical document for `m`; parse_model(model_to_json(m)) == m.
nlohmann::ordered_json model_to_json(const ModelSet& m);

}  // namespace netident
