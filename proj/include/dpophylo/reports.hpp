// Copyright 2026 The dpophylo Authors
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

// JSON shapes shared by the C API and the tests.

#include "dpophylo/interval.hpp"
#include "dpophylo/realize.hpp"

#include <nlohmann/json.hpp>

namespace dpophylo {

using Json = nlohmann::ordered_json;

/// `{ "v": {"lo": "p/q", "hi": "p/q"}, ... }`
Json to_json(const IntervalAssignment& assignment);

/// Inverse of to_json. Throws InputError on malformed input.
IntervalAssignment interval_assignment_from_json(const Json& j);

Json to_json(const Embedding& embedding);
Json to_json(const SeparationReport& report);

struct IntervalsOutcome {
    Json json;
    bool verified = false;
};

/// Assignment of the phylogeny graph plus round-trip and separation summary.
IntervalsOutcome intervals_outcome(const PointConfig& config);

} // namespace dpophylo
