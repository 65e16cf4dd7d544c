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

#include "dpophylo/generate.hpp"

#include <random>
#include <set>

namespace dpophylo {

std::string padded_label(std::size_t i, std::size_t count)
{
    auto width = std::to_string(count > 0 ? count - 1 : 0).size();
    auto digits = std::to_string(i);
    return "v" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

PointConfig random_point_config(std::uint64_t seed, const PointGenOptions& options)
{
    std::mt19937_64 rng(seed);
    const auto n = options.points;
    const long span = 3 * static_cast<long>(std::max<std::size_t>(n, 1));
    std::uniform_int_distribution<int> den_dist(1, std::max(1, options.max_denominator));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    auto coordinate = [&]() {
        const int den = den_dist(rng);
        std::uniform_int_distribution<long> num_dist(0, span * den);
        Rational r(num_dist(rng), den);
        r.canonicalize();
        return r;
    };

    std::vector<PointConfig::Entry> entries;
    std::set<std::pair<std::string, std::string>> used;
    while (entries.size() < n) {
        Point2 p{coordinate(), coordinate()};
        if (!entries.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
            if (unit(rng) < options.tie_fraction)
                p.x1 = entries[pick(rng)].point.x1;
            if (unit(rng) < options.tie_fraction)
                p.x2 = entries[pick(rng)].point.x2;
        }
        if (!used.emplace(format_rational(p.x1), format_rational(p.x2)).second)
            continue;
        entries.push_back({padded_label(entries.size(), n), std::move(p)});
    }
    return PointConfig(std::move(entries));
}

IntervalAssignment random_intervals(std::uint64_t seed, std::size_t vertices)
{
    std::mt19937_64 rng(seed);
    const long span = 4 * static_cast<long>(std::max<std::size_t>(vertices, 1));
    std::uniform_int_distribution<long> start(0, span);
    std::uniform_int_distribution<long> length(0, std::max<long>(1, span / 6));

    IntervalAssignment out;
    for (std::size_t i = 0; i < vertices; ++i) {
        const long lo = start(rng);
        out.emplace(padded_label(i, vertices), Interval(Rational(lo), Rational(lo + length(rng))));
    }
    return out;
}

Graph random_interval_graph(std::uint64_t seed, std::size_t vertices)
{
    return intersection_graph(random_intervals(seed, vertices));
}

} // namespace dpophylo
