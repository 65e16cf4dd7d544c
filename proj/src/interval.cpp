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

#include "dpophylo/interval.hpp"

#include "dpophylo/derive.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace dpophylo {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (hi_ < lo_)
        throw InputError("interval [" + format_rational(lo_) + "," + format_rational(hi_) + "] is empty");
}

Rational f_map(const Point2& p)
{
    return p.x2 - p.x1;
}

namespace {

void require_same_vertices(const Digraph& d, const PointConfig& config)
{
    if (d.vertex_count() != config.size())
        throw InputError("digraph and configuration have different vertex counts");
    for (const auto& v : d.vertices())
        if (!config.find(v))
            throw InputError("vertex '" + v + "' of the digraph is missing from the configuration");
}

} // namespace

IntervalAssignment phylogeny_intervals(const Digraph& d, const PointConfig& config)
{
    require_same_vertices(d, config);
    IntervalAssignment result;
    if (config.empty())
        return result;

    const Graph phylo = phylogeny_graph(d);
    Rational top = f_map(config.entries().front().point);
    for (const auto& e : config.entries())
        top = std::max(top, f_map(e.point));

    Rational sentinel = top + 1;
    for (const auto& e : config.entries()) {
        if (phylo.adjacency(phylo.index_of(e.label)).none()) {
            result.emplace(e.label, Interval(sentinel, sentinel));
            sentinel += 1;
            continue;
        }
        Rational lo = f_map(e.point), hi = lo;
        for (auto prey : d.out(*d.find(e.label))) {
            Rational f = f_map(config.point(d.label(prey)));
            if (f < lo)
                lo = f;
            if (hi < f)
                hi = f;
        }
        result.emplace(e.label, Interval(lo, hi));
    }
    return result;
}

Graph intersection_graph(const IntervalAssignment& assignment)
{
    std::vector<std::string> labels;
    std::vector<const Interval*> intervals;
    for (const auto& [label, interval] : assignment) {
        labels.push_back(label);
        intervals.push_back(&interval);
    }
    const auto n = labels.size();
    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (intervals[a]->intersects(*intervals[b])) {
                adj[a].set(b);
                adj[b].set(a);
            }
    return Graph::from_adjacency(std::move(labels), std::move(adj));
}

const char* to_string(SeparationPanel panel)
{
    switch (panel) {
    case SeparationPanel::Strict: return "strict";
    case SeparationPanel::FirstTie: return "first_coordinate_tie";
    case SeparationPanel::SecondTie: return "second_coordinate_tie";
    }
    return "?";
}

const char* to_string(SeparationCase c)
{
    switch (c) {
    case SeparationCase::LowerAboveMeet: return "lower_above_meet";
    case SeparationCase::UpperBelowMeet: return "upper_below_meet";
    case SeparationCase::UpperAtMeet: return "upper_at_meet";
    case SeparationCase::LowerAtMeet: return "lower_at_meet";
    }
    return "?";
}

SeparationReport verify_separation(const Digraph& d, const PointConfig& config, const IntervalAssignment& assignment)
{
    require_same_vertices(d, config);
    if (assignment.size() != config.size())
        throw InputError("interval assignment does not cover the configuration");
    for (const auto& e : config.entries())
        if (!assignment.count(e.label))
            throw InputError("interval assignment has no interval for '" + e.label + "'");

    SeparationReport report;
    const Graph phylo = phylogeny_graph(d);
    const auto n = phylo.vertex_count();

    for (std::size_t a = 0; a < n; ++a) {
        if (phylo.adjacency(a).none())
            continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            if (phylo.adjacency(b).none() || phylo.has_edge(a, b))
                continue;

            const auto& pa = config.point(phylo.label(a));
            const auto& pb = config.point(phylo.label(b));
            std::string xl, yl;
            if (southeast(pa, pb)) {
                xl = phylo.label(a);
                yl = phylo.label(b);
            }
            else if (southeast(pb, pa)) {
                xl = phylo.label(b);
                yl = phylo.label(a);
            }
            else {
                report.violation = SeparationViolation{phylo.label(a), phylo.label(b),
                                                       "non-adjacent pair is not southeast-comparable"};
                return report;
            }

            const auto& x = config.point(xl);
            const auto& y = config.point(yl);
            const auto& jx = assignment.at(xl);
            const auto& jy = assignment.at(yl);

            SeparationCheck check{xl, yl, SeparationPanel::Strict, {}, f_map(meet(x, y))};
            const Rational& m = check.meet_value;
            const char* failure = nullptr;
            auto expect = [&](bool holds, SeparationCase c, const char* what) {
                if (failure)
                    return;
                if (holds)
                    check.cases.push_back(c);
                else
                    failure = what;
            };

            if (y.x2 < x.x2)
                expect(jx.lo() > m, SeparationCase::LowerAboveMeet, "min J(x) > f(x meet y) fails");
            if (x.x1 < y.x1)
                expect(jy.hi() < m, SeparationCase::UpperBelowMeet, "max J(y) < f(x meet y) fails");
            if (x.x1 == y.x1)
                expect(jy.hi() == m, SeparationCase::UpperAtMeet, "max J(y) = f(x meet y) fails");
            if (x.x2 == y.x2)
                expect(jx.lo() == m, SeparationCase::LowerAtMeet, "min J(x) = f(x meet y) fails");
            if (!failure && !(jx.lo() > jy.hi()))
                failure = "min J(x) > max J(y) fails";
            if (failure) {
                report.violation = SeparationViolation{xl, yl, failure};
                return report;
            }

            if (x.x1 == y.x1)
                check.panel = SeparationPanel::FirstTie;
            else if (x.x2 == y.x2)
                check.panel = SeparationPanel::SecondTie;
            report.checked.push_back(std::move(check));
        }
    }
    return report;
}

bool is_chordal(const Graph& g)
{
    const auto n = g.vertex_count();
    // Maximum cardinality search; pos[v] is the visit position.
    std::vector<std::size_t> weight(n, 0), pos(n, n);
    Bitset visited(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!visited.test(v) && (best == n || weight[v] > weight[best]))
                best = v;
        visited.set(best);
        pos[best] = step;
        const auto& row = g.adjacency(best);
        for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
            if (!visited.test(u))
                ++weight[u];
    }

    // The reverse visit order is a perfect elimination ordering iff g is chordal.
    for (std::size_t v = 0; v < n; ++v) {
        Bitset earlier(n);
        std::size_t parent = n;
        const auto& row = g.adjacency(v);
        for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
            if (pos[u] < pos[v]) {
                earlier.set(u);
                if (parent == n || pos[u] > pos[parent])
                    parent = u;
            }
        if (parent == n)
            continue;
        earlier.reset(parent);
        if (!earlier.is_subset_of(g.adjacency(parent)))
            return false;
    }
    return true;
}

namespace {

// Orders the maximal cliques of one connected component so that the cliques
// containing any given vertex are consecutive. Exhaustive backtracking; a
// state is fully described by the set of placed cliques and the last one, and
// failed states are memoised.
class CliqueArranger {
  public:
    CliqueArranger(const Graph& g, std::vector<Bitset> cliques) :
        g_(g), cliques_(std::move(cliques)), remaining_(g.vertex_count(), 0)
    {
        for (const auto& c : cliques_)
            for (auto v = c.find_first(); v != Bitset::npos; v = c.find_next(v))
                ++remaining_[v];
    }

    std::optional<std::vector<std::size_t>> arrange()
    {
        const auto k = cliques_.size();
        for (std::size_t start = 0; start < k; ++start) {
            placed_ = Bitset(k);
            seen_ = Bitset(g_.vertex_count());
            order_.clear();
            push(start);
            if (search())
                return order_;
            pop();
        }
        return std::nullopt;
    }

  private:
    void push(std::size_t c)
    {
        placed_.set(c);
        order_.push_back(c);
        seen_stack_.push_back(seen_);
        seen_ |= cliques_[c];
        const auto& members = cliques_[c];
        for (auto v = members.find_first(); v != Bitset::npos; v = members.find_next(v))
            --remaining_[v];
    }

    void pop()
    {
        auto c = order_.back();
        order_.pop_back();
        placed_.reset(c);
        seen_ = seen_stack_.back();
        seen_stack_.pop_back();
        const auto& members = cliques_[c];
        for (auto v = members.find_first(); v != Bitset::npos; v = members.find_next(v))
            ++remaining_[v];
    }

    std::vector<Bitset::block_type> key() const
    {
        std::vector<Bitset::block_type> blocks;
        boost::to_block_range(placed_, std::back_inserter(blocks));
        blocks.push_back(order_.back());
        return blocks;
    }

    struct KeyHash {
        std::size_t operator()(const std::vector<Bitset::block_type>& v) const
        {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (auto b : v)
                h = (h ^ static_cast<std::size_t>(b)) * 0x100000001b3ULL;
            return h;
        }
    };

    bool search()
    {
        if (order_.size() == cliques_.size())
            return true;
        auto state = key();
        if (failed_.count(state))
            return false;

        const auto& last = cliques_[order_.back()];
        Bitset open(g_.vertex_count());
        for (auto v = last.find_first(); v != Bitset::npos; v = last.find_next(v))
            if (remaining_[v] > 0)
                open.set(v);

        if (!open.none() && nested_remainders(open)) {
            for (std::size_t c = 0; c < cliques_.size(); ++c) {
                if (placed_.test(c))
                    continue;
                const auto& members = cliques_[c];
                if (!open.is_subset_of(members) || !(members & seen_).is_subset_of(last))
                    continue;
                push(c);
                if (search())
                    return true;
                pop();
            }
        }
        failed_.insert(std::move(state));
        return false;
    }

    // The unplaced cliques of every open vertex form a prefix of the rest of
    // the arrangement, so they must be totally ordered by inclusion.
    bool nested_remainders(const Bitset& open) const
    {
        std::vector<Bitset> sets;
        for (auto v = open.find_first(); v != Bitset::npos; v = open.find_next(v)) {
            Bitset s(cliques_.size());
            for (std::size_t c = 0; c < cliques_.size(); ++c)
                if (!placed_.test(c) && cliques_[c].test(v))
                    s.set(c);
            sets.push_back(std::move(s));
        }
        std::sort(sets.begin(), sets.end(), [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
        for (std::size_t i = 0; i + 1 < sets.size(); ++i)
            if (!sets[i].is_subset_of(sets[i + 1]))
                return false;
        return true;
    }

    const Graph& g_;
    std::vector<Bitset> cliques_;
    std::vector<std::size_t> remaining_;
    Bitset placed_;
    Bitset seen_;
    std::vector<Bitset> seen_stack_;
    std::vector<std::size_t> order_;
    std::unordered_set<std::vector<Bitset::block_type>, KeyHash> failed_;
};

std::vector<std::vector<std::size_t>> components(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<std::size_t>> result;
    Bitset done(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (done.test(s))
            continue;
        std::vector<std::size_t> comp{s};
        done.set(s);
        for (std::size_t i = 0; i < comp.size(); ++i) {
            const auto& row = g.adjacency(comp[i]);
            for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
                if (!done.test(u)) {
                    done.set(u);
                    comp.push_back(u);
                }
        }
        result.push_back(std::move(comp));
    }
    return result;
}

} // namespace

std::optional<IntervalAssignment> recognize_interval(const Graph& g)
{
    if (!is_chordal(g))
        return std::nullopt;

    const auto n = g.vertex_count();
    const auto all_cliques = maximal_clique_indices(g);

    std::vector<std::size_t> component_of(n);
    const auto comps = components(g);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (auto v : comps[c])
            component_of[v] = c;

    std::vector<std::vector<Bitset>> per_component(comps.size());
    for (const auto& clique : all_cliques) {
        Bitset members(n);
        for (auto v : clique)
            members.set(v);
        per_component[component_of[clique.front()]].push_back(std::move(members));
    }

    std::vector<std::size_t> first(n, 0), last(n, 0);
    std::size_t position = 0;
    for (auto& cliques : per_component) {
        auto order = CliqueArranger(g, cliques).arrange();
        if (!order)
            return std::nullopt;
        std::vector<bool> started(n, false);
        for (auto c : *order) {
            const auto& members = cliques[c];
            for (auto v = members.find_first(); v != Bitset::npos; v = members.find_next(v)) {
                if (!started[v]) {
                    started[v] = true;
                    first[v] = position;
                }
                last[v] = position;
            }
            ++position;
        }
    }

    IntervalAssignment result;
    for (std::size_t v = 0; v < n; ++v)
        result.emplace(g.label(v), Interval(Rational(static_cast<long>(first[v])), Rational(static_cast<long>(last[v]))));
    if (!(intersection_graph(result) == g))
        throw InvariantViolation("recognize_interval: clique arrangement does not reproduce the graph");
    return result;
}

} // namespace dpophylo
