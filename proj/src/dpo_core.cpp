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

#include "dpophylo/dpo_core.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dpophylo {

bool precedes(const Point2& x, const Point2& y)
{
    return x.x1 < y.x1 && x.x2 < y.x2;
}

bool southeast(const Point2& x, const Point2& y)
{
    return x.x1 <= y.x1 && y.x2 <= x.x2;
}

Point2 meet(const Point2& x, const Point2& y)
{
    return Point2{x.x1 < y.x1 ? x.x1 : y.x1, x.x2 < y.x2 ? x.x2 : y.x2};
}

PointConfig::PointConfig(std::vector<Entry> entries) : entries_(std::move(entries))
{
    // Points are compared through their canonical text, which is exact for
    // reduced rationals.
    std::map<std::pair<std::string, std::string>, std::size_t> seen_points;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (!is_valid_label(e.label))
            throw InputError("invalid vertex label '" + e.label + "'");
        if (!index_.emplace(e.label, i).second)
            throw InputError("duplicate label '" + e.label + "'");
        auto key = std::make_pair(format_rational(e.point.x1), format_rational(e.point.x2));
        auto [it, fresh] = seen_points.emplace(key, i);
        if (!fresh)
            throw InputError("duplicate point (" + key.first + "," + key.second + ") for labels '" +
                             entries_[it->second].label + "' and '" + e.label + "'");
    }
}

std::optional<std::size_t> PointConfig::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const Point2& PointConfig::point(std::string_view label) const
{
    auto i = find(label);
    if (!i)
        throw InputError("unknown vertex '" + std::string(label) + "'");
    return entries_[*i].point;
}

Digraph::Digraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arcs) :
    vertices_(std::move(vertices)),
    out_(vertices_.size()),
    out_bits_(vertices_.size(), boost::dynamic_bitset<>(vertices_.size()))
{
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (!index_.emplace(vertices_[i], i).second)
            throw InputError("duplicate vertex '" + vertices_[i] + "'");

    for (const auto& [from, to] : arcs) {
        auto s = find(from), t = find(to);
        if (!s || !t)
            throw InputError("arc (" + from + "," + to + ") has an unknown endpoint");
        if (*s == *t)
            throw InputError("loop at '" + from + "'");
        if (out_bits_[*s].test(*t))
            throw InputError("duplicate arc (" + from + "," + to + ")");
        out_bits_[*s].set(*t);
    }
    for (std::size_t s = 0; s < vertices_.size(); ++s)
        for (auto t = out_bits_[s].find_first(); t != boost::dynamic_bitset<>::npos; t = out_bits_[s].find_next(t))
            out_[s].push_back(t);
}

std::optional<std::size_t> Digraph::find(std::string_view label) const
{
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t Digraph::arc_count() const
{
    std::size_t n = 0;
    for (const auto& o : out_)
        n += o.size();
    return n;
}

std::vector<std::pair<std::string, std::string>> Digraph::arcs() const
{
    std::vector<std::pair<std::string, std::string>> result;
    for (std::size_t s = 0; s < vertices_.size(); ++s)
        for (auto t : out_[s])
            result.emplace_back(vertices_[s], vertices_[t]);
    return result;
}

bool operator==(const Digraph& a, const Digraph& b)
{
    return a.vertices_ == b.vertices_ && a.out_ == b.out_;
}

Digraph build_dpo(const PointConfig& config)
{
    const auto& entries = config.entries();
    std::vector<std::string> labels;
    labels.reserve(entries.size());
    for (const auto& e : entries)
        labels.push_back(e.label);

    std::vector<std::pair<std::string, std::string>> arcs;
    for (const auto& x : entries)
        for (const auto& v : entries)
            if (precedes(v.point, x.point))
                arcs.emplace_back(x.label, v.label);
    return Digraph(std::move(labels), arcs);
}

std::vector<std::string> out_neighborhood(const Digraph& d, std::string_view v)
{
    auto i = d.find(v);
    if (!i)
        throw InputError("unknown vertex '" + std::string(v) + "'");
    std::vector<std::string> result;
    for (auto t : d.out(*i))
        result.push_back(d.label(t));
    return result;
}

PointConfig parse_points_csv(std::string_view text)
{
    std::vector<PointConfig::Entry> entries;
    std::size_t line_no = 0;
    for (auto raw : detail::split_lines(text)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        auto fields = detail::split(line, ',');
        if (fields.size() != 3)
            throw InputError("line " + std::to_string(line_no) + ": expected 'label,x1,x2', got '" +
                             std::string(line) + "'");
        try {
            auto label = std::string(detail::trim(fields[0]));
            if (!is_valid_label(label))
                throw InputError("invalid vertex label '" + label + "'");
            entries.push_back({label, Point2{parse_rational(detail::trim(fields[1])),
                                             parse_rational(detail::trim(fields[2]))}});
        }
        catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return PointConfig(std::move(entries));
}

std::string format_points_csv(const PointConfig& config)
{
    std::string out;
    for (const auto& e : config.entries())
        out += e.label + "," + format_rational(e.point.x1) + "," + format_rational(e.point.x2) + "\n";
    return out;
}

std::string format_arc_list(const Digraph& d)
{
    std::string out;
    for (const auto& [s, t] : d.arcs())
        out += s + " " + t + "\n";
    return out;
}

std::string format_dot(const Digraph& d)
{
    std::ostringstream out;
    out << "digraph D {\n";
    for (const auto& v : d.vertices())
        out << "  " << detail::dot_id(v) << ";\n";
    for (const auto& [s, t] : d.arcs())
        out << "  " << detail::dot_id(s) << " -> " << detail::dot_id(t) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace dpophylo
