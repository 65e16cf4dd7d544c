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

#include "dpophylo/realize.hpp"

#include "dpophylo/derive.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <limits>
#include <set>
#include <thread>

namespace dpophylo {

std::optional<ObstructionWitness> obstruction_theorem4(const Graph& g)
{
    const auto n = g.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
        const auto& nu = g.adjacency(u);
        if (nu.count() < 2)
            continue;
        for (auto v = nu.find_first(); v != Bitset::npos; v = nu.find_next(v)) {
            const auto& nv = g.adjacency(v);
            if (nv.count() < 2 || nu.intersects(nv))
                continue;
            auto a = nu.find_first();
            if (a == v)
                a = nu.find_next(a);
            auto b = nv.find_first();
            if (b == u)
                b = nv.find_next(b);
            return ObstructionWitness{g.label(u), g.label(v), g.label(a), g.label(b)};
        }
    }
    return std::nullopt;
}

std::vector<std::string> fresh_labels(const std::vector<std::string>& taken, std::size_t count,
                                      const std::string& prefix)
{
    std::set<std::string> used(taken.begin(), taken.end());
    std::string p = prefix;
    for (;;) {
        std::vector<std::string> out;
        bool clash = false;
        for (std::size_t i = 1; i <= count && !clash; ++i) {
            out.push_back(p + std::to_string(i));
            clash = used.count(out.back()) != 0;
        }
        if (!clash)
            return out;
        p = "_" + p;
    }
}

namespace {

using Mask = std::uint8_t;
using RankVector = std::array<std::uint8_t, grid_search_limit>;

// All vectors in {0..m-1}^m whose value set is {0..k-1} for some k, in
// lexicographic order.
std::vector<RankVector> packed_rank_vectors(std::size_t m)
{
    std::vector<RankVector> out;
    RankVector v{};
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i)
        total *= m;
    for (std::size_t code = 0; code < total; ++code) {
        auto c = code;
        for (std::size_t i = m; i-- > 0;) {
            v[i] = static_cast<std::uint8_t>(c % m);
            c /= m;
        }
        unsigned used = 0;
        std::uint8_t top = 0;
        for (std::size_t i = 0; i < m; ++i) {
            used |= 1u << v[i];
            top = std::max(top, v[i]);
        }
        if (used == (1u << (top + 1)) - 1)
            out.push_back(v);
    }
    return out;
}

// Phylogeny adjacency masks of the configuration (xs[i], ys[i]), i < m.
// Returns false if two points coincide.
bool grid_phylogeny(const RankVector& xs, const RankVector& ys, std::size_t m, std::array<Mask, grid_search_limit>& adj)
{
    std::array<Mask, grid_search_limit> prey{};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i != j && xs[i] == xs[j] && ys[i] == ys[j])
                return false;
            if (xs[j] < xs[i] && ys[j] < ys[i])
                prey[i] |= static_cast<Mask>(1u << j);
        }
    for (std::size_t i = 0; i < m; ++i) {
        Mask row = 0;
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && (((prey[i] >> j) & 1u) || ((prey[j] >> i) & 1u) || (prey[i] & prey[j])))
                row |= static_cast<Mask>(1u << j);
        adj[i] = row;
    }
    return true;
}

struct GridHit {
    std::size_t x_index;
    std::size_t y_index;
};

// First (x_index, y_index) in lexicographic order for which `accept` holds.
template <class Accept>
std::optional<GridHit> grid_search(const std::vector<RankVector>& space, std::size_t m, unsigned jobs, Accept accept)
{
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> best_x{none};
    const unsigned workers = std::max(1u, jobs);
    std::vector<GridHit> hits(workers, GridHit{none, none});

    auto work = [&](unsigned w) {
        std::array<Mask, grid_search_limit> adj{};
        for (std::size_t xi = w; xi < space.size(); xi += workers) {
            if (xi > best_x.load(std::memory_order_relaxed))
                return;
            for (std::size_t yi = 0; yi < space.size(); ++yi) {
                if (!grid_phylogeny(space[xi], space[yi], m, adj) || !accept(adj))
                    continue;
                hits[w] = GridHit{xi, yi};
                auto cur = best_x.load();
                while (xi < cur && !best_x.compare_exchange_weak(cur, xi)) {
                }
                return;
            }
        }
    };

    if (workers == 1) {
        work(0);
    }
    else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back(work, w);
        for (auto& t : threads)
            t.join();
    }

    std::optional<GridHit> best;
    for (const auto& h : hits)
        if (h.x_index != none && (!best || h.x_index < best->x_index))
            best = h;
    return best;
}

std::array<Mask, grid_search_limit> adjacency_masks(const Graph& g)
{
    std::array<Mask, grid_search_limit> out{};
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        for (std::size_t j = 0; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j))
                out[i] |= static_cast<Mask>(1u << j);
    return out;
}

PointConfig grid_config(const std::vector<std::string>& labels, const RankVector& xs, const RankVector& ys)
{
    std::vector<PointConfig::Entry> entries;
    for (std::size_t i = 0; i < labels.size(); ++i)
        entries.push_back({labels[i], Point2{Rational(xs[i] + 1), Rational(ys[i] + 1)}});
    return PointConfig(std::move(entries));
}

} // namespace

std::optional<PointConfig> realizable_bruteforce(const Graph& g, std::size_t n_max, unsigned jobs)
{
    if (n_max > grid_search_limit || g.vertex_count() > n_max)
        throw GuardExceeded("realizable_bruteforce: needs |V(G)| <= n_max <= " + std::to_string(grid_search_limit) +
                            ", got |V(G)| = " + std::to_string(g.vertex_count()) +
                            ", n_max = " + std::to_string(n_max));
    const auto m = g.vertex_count();
    if (m == 0)
        return PointConfig{};

    const auto space = packed_rank_vectors(m);
    const auto target = adjacency_masks(g);
    auto hit = grid_search(space, m, jobs, [&](const std::array<Mask, grid_search_limit>& adj) {
        return std::equal(adj.begin(), adj.begin() + static_cast<std::ptrdiff_t>(m), target.begin());
    });
    if (!hit)
        return std::nullopt;
    return grid_config(g.vertices(), space[hit->x_index], space[hit->y_index]);
}

std::optional<PdpoWitness> pdpo_search(const Graph& g, std::size_t r_max, unsigned jobs)
{
    const auto n = g.vertex_count();
    if (n + r_max > grid_search_limit)
        throw GuardExceeded("pdpo_search: needs |V(G)| + r_max <= " + std::to_string(grid_search_limit) +
                            ", got " + std::to_string(n) + " + " + std::to_string(r_max));

    const auto target = adjacency_masks(g);
    const Mask original = static_cast<Mask>((1u << n) - 1);
    for (std::size_t r = 0; r <= r_max; ++r) {
        const auto m = n + r;
        if (m == 0)
            return PdpoWitness{0, PointConfig{}, Graph{}, Embedding{}};

        // The first n points carry g's vertices in canonical order. Any witness
        // can be relabelled into this form, so nothing is lost.
        const auto space = packed_rank_vectors(m);
        auto hit = grid_search(space, m, jobs, [&](const std::array<Mask, grid_search_limit>& adj) {
            for (std::size_t i = 0; i < n; ++i)
                if ((adj[i] & original) != target[i])
                    return false;
            return true;
        });
        if (!hit)
            continue;

        auto labels = g.vertices();
        for (auto& extra : fresh_labels(g.vertices(), r))
            labels.push_back(std::move(extra));
        PdpoWitness witness{r, grid_config(labels, space[hit->x_index], space[hit->y_index]), Graph{}, Embedding{}};
        witness.extended = phylogeny_graph(build_dpo(witness.config));
        for (const auto& v : g.vertices())
            witness.embedding.emplace(v, v);
        if (!(induced_subgraph(witness.extended, g.vertices()) == g))
            throw InvariantViolation("pdpo_search: witness does not contain the graph as an induced subgraph");
        return witness;
    }
    return std::nullopt;
}

namespace {

bool endpoints_distinct(const IntervalAssignment& r)
{
    std::set<std::string> seen;
    for (const auto& [v, j] : r) {
        if (!seen.insert(format_rational(j.lo())).second || !seen.insert(format_rational(j.hi())).second)
            return false;
    }
    return true;
}

// Renumbers endpoints to 0, 2, 4, ... keeping their order. At equal values,
// left endpoints come before right endpoints, so touching intervals still meet
// and point intervals stay nonempty.
IntervalAssignment spread_endpoints(const IntervalAssignment& r)
{
    struct Event {
        Rational value;
        int side; // 0 = left, 1 = right
        std::string vertex;
    };
    std::vector<Event> events;
    for (const auto& [v, j] : r) {
        events.push_back({j.lo(), 0, v});
        events.push_back({j.hi(), 1, v});
    }
    std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
        if (a.value != b.value)
            return a.value < b.value;
        if (a.side != b.side)
            return a.side < b.side;
        return a.vertex < b.vertex;
    });

    std::map<std::string, std::pair<Rational, Rational>> ends;
    for (std::size_t i = 0; i < events.size(); ++i) {
        auto& slot = ends[events[i].vertex];
        (events[i].side == 0 ? slot.first : slot.second) = Rational(static_cast<long>(2 * i));
    }
    IntervalAssignment out;
    for (auto& [v, e] : ends)
        out.emplace(v, Interval(e.first, e.second));
    return out;
}

} // namespace

CompetitionRealization chokim_competition_dpo(const Graph& g, const IntervalAssignment& representation)
{
    if (auto isolated = g.isolated_vertices(); !isolated.empty())
        throw InputError("chokim_competition_dpo: graph has isolated vertex '" + isolated.front() + "'");
    if (!(intersection_graph(representation) == g))
        throw InputError("chokim_competition_dpo: interval assignment does not realize the graph");

    CompetitionRealization out;
    out.intervals = endpoints_distinct(representation) ? representation : spread_endpoints(representation);
    if (!(intersection_graph(out.intervals) == g))
        throw InvariantViolation("chokim_competition_dpo: endpoint renumbering changed the intersection graph");

    std::vector<PointConfig::Entry> entries;
    for (const auto& v : g.vertices()) {
        const auto& j = out.intervals.at(v);
        entries.push_back({v, Point2{-j.lo(), j.hi()}});
    }

    out.cliques = maximal_cliques(g);
    out.prey = fresh_labels(g.vertices(), out.cliques.size());
    for (std::size_t q = 0; q < out.cliques.size(); ++q) {
        const auto& clique = out.cliques[q];
        Rational lo = out.intervals.at(clique.front()).lo(), hi = out.intervals.at(clique.front()).hi();
        for (const auto& v : clique) {
            lo = std::max(lo, out.intervals.at(v).lo());
            hi = std::min(hi, out.intervals.at(v).hi());
        }

        auto strictly_inside = [&](const Rational& p) {
            std::vector<std::string> members;
            for (const auto& [v, j] : out.intervals)
                if (j.lo() < p && p < j.hi())
                    members.push_back(v);
            return members == clique;
        };
        const Rational mid = (lo + hi) / 2;
        const Rational quarter(1, 4);
        std::optional<Rational> chosen;
        for (const Rational& p : {mid, Rational(mid - quarter), Rational(mid + quarter)})
            if (lo < p && p < hi && strictly_inside(p)) {
                chosen = p;
                break;
            }
        if (!chosen)
            throw InvariantViolation("chokim_competition_dpo: no prey position isolates clique " + std::to_string(q));
        entries.push_back({out.prey[q], Point2{-*chosen, *chosen}});
    }
    out.config = PointConfig(std::move(entries));
    return out;
}

ExtensionResult extend_to_dpo_phylogeny(const Graph& g)
{
    const auto isolated = g.isolated_vertices();
    std::vector<std::string> core_vertices;
    std::set_difference(g.vertices().begin(), g.vertices().end(), isolated.begin(), isolated.end(),
                        std::back_inserter(core_vertices));
    const Graph core = induced_subgraph(g, core_vertices);

    auto representation = recognize_interval(core);
    if (!representation)
        throw InputError("extend_to_dpo_phylogeny: graph is not an interval graph");
    auto realization = chokim_competition_dpo(core, *representation);

    auto entries = realization.config.entries();
    if (!isolated.empty()) {
        // Far out on the anti-diagonal, incomparable with everything.
        Rational bound = 0;
        for (const auto& e : entries)
            bound = std::max({bound, Rational(abs(e.point.x1)), Rational(abs(e.point.x2))});
        mpz_class far = bound.get_num() / bound.get_den() + 1;
        for (std::size_t k = 0; k < isolated.size(); ++k) {
            Rational t(far + static_cast<long>(k));
            entries.push_back({isolated[k], Point2{t, Rational(-t)}});
        }
    }

    ExtensionResult result{PointConfig(std::move(entries)), Graph{}, realization.prey, Embedding{}};
    result.extended = phylogeny_graph(build_dpo(result.config));
    for (const auto& v : g.vertices())
        result.embedding.emplace(v, v);
    if (!(induced_subgraph(result.extended, g.vertices()) == g))
        throw InvariantViolation("extend_to_dpo_phylogeny: original graph is not induced in the extension");
    return result;
}

} // namespace dpophylo
