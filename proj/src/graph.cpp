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

#include "dpophylo/graph.hpp"

#include "text_util.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dpophylo {

Graph::Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges) :
    vertices_(std::move(vertices))
{
    for (const auto& v : vertices_)
        if (!is_valid_label(v))
            throw InputError("invalid vertex label '" + v + "'");
    std::sort(vertices_.begin(), vertices_.end());
    if (auto dup = std::adjacent_find(vertices_.begin(), vertices_.end()); dup != vertices_.end())
        throw InputError("duplicate vertex '" + *dup + "'");

    adj_.assign(vertices_.size(), Bitset(vertices_.size()));
    for (const auto& [a, b] : edges) {
        auto u = find(a), v = find(b);
        if (!u || !v)
            throw InputError("edge (" + a + "," + b + ") has an unknown endpoint");
        if (*u == *v)
            throw InputError("loop at '" + a + "'");
        if (adj_[*u].test(*v))
            throw InputError("multi-edge between '" + a + "' and '" + b + "'");
        adj_[*u].set(*v);
        adj_[*v].set(*u);
    }
}

Graph Graph::from_adjacency(std::vector<std::string> vertices, std::vector<Bitset> adjacency)
{
    Graph g;
    g.vertices_ = std::move(vertices);
    g.adj_ = std::move(adjacency);
    return g;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (const auto& row : adj_)
        twice += row.count();
    return twice / 2;
}

std::optional<std::size_t> Graph::find(std::string_view label) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
    if (it == vertices_.end() || *it != label)
        return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::index_of(std::string_view label) const
{
    auto i = find(label);
    if (!i)
        throw InputError("unknown vertex '" + std::string(label) + "'");
    return *i;
}

bool Graph::has_edge(std::string_view u, std::string_view v) const
{
    return has_edge(index_of(u), index_of(v));
}

std::vector<std::pair<std::string, std::string>> Graph::edges() const
{
    std::vector<std::pair<std::string, std::string>> result;
    for (std::size_t u = 0; u < vertices_.size(); ++u)
        for (auto v = adj_[u].find_next(u); v != Bitset::npos; v = adj_[u].find_next(v))
            result.emplace_back(vertices_[u], vertices_[v]);
    return result;
}

std::vector<std::string> Graph::isolated_vertices() const
{
    std::vector<std::string> result;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (adj_[v].none())
            result.push_back(vertices_[v]);
    return result;
}

std::vector<std::string> neighbors(const Graph& g, std::string_view v)
{
    std::vector<std::string> result;
    const auto& row = g.adjacency(g.index_of(v));
    for (auto u = row.find_first(); u != Bitset::npos; u = row.find_next(u))
        result.push_back(g.label(u));
    return result;
}

std::size_t degree(const Graph& g, std::string_view v)
{
    return g.adjacency(g.index_of(v)).count();
}

Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset)
{
    std::vector<std::size_t> keep;
    for (const auto& s : subset) {
        auto i = g.find(s);
        if (!i)
            throw InputError("vertex '" + s + "' is not in the graph");
        keep.push_back(*i);
    }
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw InputError("induced_subgraph: repeated vertex in subset");

    std::vector<std::string> labels;
    for (auto i : keep)
        labels.push_back(g.label(i));
    std::vector<Bitset> adj(keep.size(), Bitset(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (g.has_edge(keep[a], keep[b])) {
                adj[a].set(b);
                adj[b].set(a);
            }
    return Graph::from_adjacency(std::move(labels), std::move(adj));
}

namespace {

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const Graph& g, std::vector<std::size_t>& r, Bitset p, Bitset x,
                   std::vector<std::vector<std::size_t>>& out)
{
    if (p.none() && x.none()) {
        auto clique = r;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
        return;
    }

    std::size_t pivot = Bitset::npos, best = 0;
    for (const Bitset* set : {&p, &x})
        for (auto u = set->find_first(); u != Bitset::npos; u = set->find_next(u)) {
            auto c = (p & g.adjacency(u)).count();
            if (pivot == Bitset::npos || c > best) {
                pivot = u;
                best = c;
            }
        }

    Bitset candidates = p - g.adjacency(pivot);
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
        r.push_back(v);
        bron_kerbosch(g, r, p & g.adjacency(v), x & g.adjacency(v), out);
        r.pop_back();
        p.reset(v);
        x.set(v);
    }
}

} // namespace

std::vector<std::vector<std::size_t>> maximal_clique_indices(const Graph& g)
{
    std::vector<std::vector<std::size_t>> out;
    if (g.vertex_count() == 0)
        return out;
    std::vector<std::size_t> r;
    Bitset all(g.vertex_count());
    all.set();
    bron_kerbosch(g, r, all, Bitset(g.vertex_count()), out);
    // Index order equals label order, so this is the canonical label order.
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::string>> maximal_cliques(const Graph& g)
{
    std::vector<std::vector<std::string>> result;
    for (const auto& clique : maximal_clique_indices(g)) {
        std::vector<std::string> labels;
        for (auto i : clique)
            labels.push_back(g.label(i));
        result.push_back(std::move(labels));
    }
    return result;
}

namespace {

struct EmbeddingSearch {
    const Graph& pattern;
    const Graph& host;
    std::vector<std::size_t> image;
    Bitset used;

    bool extend(std::size_t next)
    {
        if (next == pattern.vertex_count())
            return true;
        for (std::size_t h = 0; h < host.vertex_count(); ++h) {
            if (used.test(h))
                continue;
            bool consistent = true;
            for (std::size_t prev = 0; prev < next && consistent; ++prev)
                consistent = pattern.has_edge(prev, next) == host.has_edge(image[prev], h);
            if (!consistent)
                continue;
            image[next] = h;
            used.set(h);
            if (extend(next + 1))
                return true;
            used.reset(h);
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host, std::size_t guard)
{
    if (pattern.vertex_count() > guard)
        throw GuardExceeded("find_induced_embedding: pattern has " + std::to_string(pattern.vertex_count()) +
                            " vertices, guard is " + std::to_string(guard));
    if (pattern.vertex_count() > host.vertex_count())
        return std::nullopt;

    EmbeddingSearch search{pattern, host, std::vector<std::size_t>(pattern.vertex_count()), Bitset(host.vertex_count())};
    if (!search.extend(0))
        return std::nullopt;

    Embedding phi;
    for (std::size_t i = 0; i < pattern.vertex_count(); ++i)
        phi.emplace(pattern.label(i), host.label(search.image[i]));
    return phi;
}

std::string format_edge_list(const Graph& g)
{
    std::string out;
    for (const auto& [u, v] : g.edges())
        out += u + " " + v + "\n";
    for (const auto& w : g.isolated_vertices())
        out += "vertex " + w + "\n";
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::vector<std::string> vertices;
    std::set<std::string> seen;
    std::vector<std::pair<std::string, std::string>> edges;
    std::set<std::pair<std::string, std::string>> seen_edges;

    auto add_vertex = [&](std::string_view v, std::size_t line_no) {
        if (!is_valid_label(v))
            throw InputError("line " + std::to_string(line_no) + ": invalid vertex label '" + std::string(v) + "'");
        if (seen.emplace(v).second)
            vertices.emplace_back(v);
    };

    std::size_t line_no = 0;
    for (auto raw : detail::split_lines(text)) {
        ++line_no;
        auto line = detail::trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        auto parts = detail::split_ws(line);
        if (parts.size() != 2)
            throw InputError("line " + std::to_string(line_no) + ": expected 'u v' or 'vertex w', got '" +
                             std::string(line) + "'");
        if (parts[0] == "vertex") {
            add_vertex(parts[1], line_no);
            continue;
        }
        if (parts[0] == parts[1])
            throw InputError("line " + std::to_string(line_no) + ": loop at '" + std::string(parts[0]) + "'");
        add_vertex(parts[0], line_no);
        add_vertex(parts[1], line_no);
        std::string a(parts[0]), b(parts[1]);
        if (b < a)
            std::swap(a, b);
        if (!seen_edges.emplace(a, b).second)
            throw InputError("line " + std::to_string(line_no) + ": repeated edge '" + std::string(line) + "'");
        edges.emplace_back(parts[0], parts[1]);
    }
    return Graph(std::move(vertices), edges);
}

std::string format_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& v : g.vertices())
        out << "  " << detail::dot_id(v) << ";\n";
    for (const auto& [u, v] : g.edges())
        out << "  " << detail::dot_id(u) << " -- " << detail::dot_id(v) << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace dpophylo
