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

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

using dpophylo::Graph;
using dpophylo::Point2;
using dpophylo::PointConfig;
using dpophylo::Rational;

inline Point2 pt(const char* x1, const char* x2)
{
    return Point2{dpophylo::parse_rational(x1), dpophylo::parse_rational(x2)};
}

inline Point2 pt(int x1, int x2)
{
    return Point2{Rational(x1), Rational(x2)};
}

inline PointConfig config(std::initializer_list<std::pair<const char*, Point2>> entries)
{
    std::vector<PointConfig::Entry> out;
    for (const auto& [label, p] : entries)
        out.push_back({label, p});
    return PointConfig(std::move(out));
}

inline Graph graph(std::vector<std::string> vertices, std::vector<std::pair<std::string, std::string>> edges)
{
    return Graph(std::move(vertices), edges);
}

// a-u-v-b
inline Graph p4()
{
    return graph({"a", "u", "v", "b"}, {{"a", "u"}, {"u", "v"}, {"v", "b"}});
}

inline Graph k(std::size_t n)
{
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(names[i], names[j]);
    return graph(names, edges);
}

inline Graph c4()
{
    return graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}

inline Graph claw()
{
    return graph({"c", "x", "y", "z"}, {{"c", "x"}, {"c", "y"}, {"c", "z"}});
}

// z=(1,1), u=(2,3), v=(4,5)
inline PointConfig chain()
{
    return config({{"z", pt(1, 1)}, {"u", pt(2, 3)}, {"v", pt(4, 5)}});
}

} // namespace fixtures
