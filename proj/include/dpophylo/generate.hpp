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

#include "dpophylo/dpo_core.hpp"
#include "dpophylo/graph.hpp"
#include "dpophylo/interval.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace dpophylo {

struct PointGenOptions {
    std::size_t points = 10;
    /// Share of points that copy the first coordinate of an earlier point, and
    /// independently the share that copy the second coordinate.
    double tie_fraction = 0.0;
    /// Denominators are drawn from 1..max_denominator.
    int max_denominator = 4;
};

/// Random configuration of distinct rational points. Labels are `v` plus a
/// zero-padded index so that label order equals generation order.
PointConfig random_point_config(std::uint64_t seed, const PointGenOptions& options);

/// Random integer intervals on vertices labelled like random_point_config.
IntervalAssignment random_intervals(std::uint64_t seed, std::size_t vertices);

/// Intersection graph of random_intervals(seed, vertices).
Graph random_interval_graph(std::uint64_t seed, std::size_t vertices);

/// `v` plus `i` zero-padded to the width of `count - 1`.
std::string padded_label(std::size_t i, std::size_t count);

} // namespace dpophylo
