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

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dpophylo {

/// Closed interval [lo, hi] with lo <= hi. A point interval is allowed.
class Interval {
  public:
    /// Throws InputError when lo > hi.
    Interval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }

    bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo_ == b.lo_ && a.hi_ == b.hi_; }

  private:
    Rational lo_;
    Rational hi_;
};

/// Vertex label to interval. Ordered by label, which is the canonical vertex order.
using IntervalAssignment = std::map<std::string, Interval>;

/// Diagonal projection x2 - x1.
Rational f_map(const Point2& p);

/// Interval representation of the phylogeny graph of a doubly partial order.
///
/// A vertex that is not isolated in the phylogeny graph gets the hull of the
/// f-values of itself and its prey. The k-th isolated vertex (in configuration
/// order) gets the point interval [M + k - 1, M + k - 1] where M exceeds every
/// f-value of the configuration by one.
///
/// Throws InputError if the vertex sets of `d` and `config` differ.
IntervalAssignment phylogeny_intervals(const Digraph& d, const PointConfig& config);

/// Edge vw iff the closed intervals of v and w meet.
Graph intersection_graph(const IntervalAssignment& assignment);

/// Which coordinates tie for a non-adjacent pair x, y with x southeast of y.
enum class SeparationPanel {
    Strict,          ///< x1 < y1 and y2 < x2
    FirstTie,        ///< x1 = y1 and y2 < x2
    SecondTie,       ///< x1 < y1 and x2 = y2
};

/// Individual inequalities checked against m = f(meet(x, y)).
enum class SeparationCase {
    LowerAboveMeet,  ///< y2 < x2 implies min J(x) > m
    UpperBelowMeet,  ///< x1 < y1 implies max J(y) < m
    UpperAtMeet,     ///< x1 = y1 implies max J(y) = m
    LowerAtMeet,     ///< x2 = y2 implies min J(x) = m
};

const char* to_string(SeparationPanel panel);
const char* to_string(SeparationCase c);

struct SeparationCheck {
    std::string upper;   ///< x: its interval lies above
    std::string lower;   ///< y
    SeparationPanel panel;
    std::vector<SeparationCase> cases;
    Rational meet_value;
};

struct SeparationViolation {
    std::string first;
    std::string second;
    std::string reason;
};

struct SeparationReport {
    /// Verified pairs in canonical pair order, up to the first violation.
    std::vector<SeparationCheck> checked;
    std::optional<SeparationViolation> violation;

    bool ok() const { return !violation.has_value(); }
};

/// Checks min J(x) > max J(y) and the per-panel inequalities behind it for
/// every non-adjacent pair of non-isolated vertices of the phylogeny graph.
/// Stops at the first violated pair.
///
/// Throws InputError if the vertex sets of `d`, `config` and `assignment`
/// differ.
SeparationReport verify_separation(const Digraph& d, const PointConfig& config, const IntervalAssignment& assignment);

/// Interval representation of `g` if it is an interval graph. Vertex v gets
/// [first, last] where first and last are the positions of the leftmost and
/// rightmost maximal clique containing v in a consecutive clique arrangement.
/// The result is checked against `g` before it is returned.
std::optional<IntervalAssignment> recognize_interval(const Graph& g);

/// Perfect elimination ordering check driven by maximum cardinality search.
bool is_chordal(const Graph& g);

} // namespace dpophylo
