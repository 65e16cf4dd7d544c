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

#include "dpophylo/derive.hpp"

#include <algorithm>
#include <numeric>

namespace dpophylo {

namespace {

// Graph vertices are label-sorted while digraph vertices keep input order,
// so `perm[k]` is the digraph index of the k-th smallest label.
Graph derive(const Digraph& d, bool with_arcs)
{
    const auto n = d.vertex_count();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return d.label(a) < d.label(b); });

    std::vector<std::string> labels;
    labels.reserve(n);
    for (auto i : perm)
        labels.push_back(d.label(i));

    std::vector<Bitset> adj(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
        const auto u = perm[a];
        const auto& prey_u = d.out_bits(u);
        if (prey_u.none() && !with_arcs)
            continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            const auto v = perm[b];
            bool edge = prey_u.intersects(d.out_bits(v));
            if (with_arcs && !edge)
                edge = d.has_arc(u, v) || d.has_arc(v, u);
            if (edge) {
                adj[a].set(b);
                adj[b].set(a);
            }
        }
    }
    return Graph::from_adjacency(std::move(labels), std::move(adj));
}

} // namespace

Graph competition_graph(const Digraph& d)
{
    return derive(d, false);
}

Graph phylogeny_graph(const Digraph& d)
{
    return derive(d, true);
}

} // namespace dpophylo
