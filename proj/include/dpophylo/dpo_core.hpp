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

#include "dpophylo/common.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dpophylo {

struct Point2 {
    Rational x1;
    Rational x2;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x1 == b.x1 && a.x2 == b.x2; }
};

/// Strict dominance: x1 < y1 and x2 < y2.
bool precedes(const Point2& x, const Point2& y);

/// x lies weakly up-left of y: x1 <= y1 and y2 <= x2.
bool southeast(const Point2& x, const Point2& y);

/// Coordinatewise minimum.
Point2 meet(const Point2& x, const Point2& y);

/// A labeled finite set of distinct planar points, kept in insertion order.
class PointConfig {
  public:
    struct Entry {
        std::string label;
        Point2 point;
    };

    PointConfig() = default;

    /// Throws InputError on an invalid or duplicate label, or a duplicate point.
    explicit PointConfig(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    std::optional<std::size_t> find(std::string_view label) const;
    const Point2& point(std::string_view label) const;

  private:
    std::vector<Entry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Simple digraph. Vertices keep the order they were given in; arc lists are
/// sorted by that order.
class Digraph {
  public:
    Digraph() = default;

    /// Throws InputError on duplicate vertices, loops, duplicate arcs, or
    /// unknown endpoints.
    Digraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arcs);

    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& label(std::size_t i) const { return vertices_[i]; }
    std::optional<std::size_t> find(std::string_view label) const;

    bool has_arc(std::size_t from, std::size_t to) const { return out_bits_[from].test(to); }
    const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
    const boost::dynamic_bitset<>& out_bits(std::size_t v) const { return out_bits_[v]; }
    std::size_t arc_count() const;

    /// Arcs as (source, target) labels, ordered by source then target position.
    std::vector<std::pair<std::string, std::string>> arcs() const;

    friend bool operator==(const Digraph& a, const Digraph& b);

  private:
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::vector<boost::dynamic_bitset<>> out_bits_;
};

/// The doubly partial order of a configuration: arc (x, v) iff v precedes x.
Digraph build_dpo(const PointConfig& config);

/// Prey of v, in vertex order. Throws InputError for an unknown vertex.
std::vector<std::string> out_neighborhood(const Digraph& d, std::string_view v);

/// Reads `label,x1,x2` lines; blank lines and `#` comments are skipped.
/// Errors carry the 1-based line number.
PointConfig parse_points_csv(std::string_view text);

std::string format_points_csv(const PointConfig& config);

/// One `source target` line per arc.
std::string format_arc_list(const Digraph& d);

std::string format_dot(const Digraph& d);

} // namespace dpophylo
