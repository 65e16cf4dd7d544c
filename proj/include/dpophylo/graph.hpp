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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpophylo {

using Bitset = boost::dynamic_bitset<>;

/// Simple undirected graph. Vertices are stored in canonical (lexicographic
/// label) order; vertex indices refer to that order.
class Graph {
  public:
    Graph() = default;

    /// Throws InputError on invalid or duplicate labels, loops, or unknown
    /// endpoints. Repeated edges are rejected as multi-edges.
    Graph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& edges);

    /// `vertices` must already be sorted and unique; `adjacency` must be
    /// symmetric with an empty diagonal.
    static Graph from_adjacency(std::vector<std::string> vertices, std::vector<Bitset> adjacency);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const;
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& label(std::size_t i) const { return vertices_[i]; }
    std::optional<std::size_t> find(std::string_view label) const;
    std::size_t index_of(std::string_view label) const;

    bool has_edge(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
    bool has_edge(std::string_view u, std::string_view v) const;
    const Bitset& adjacency(std::size_t v) const { return adj_[v]; }

    /// Edges as label pairs (u < v), sorted.
    std::vector<std::pair<std::string, std::string>> edges() const;
    std::vector<std::string> isolated_vertices() const;

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.vertices_ == b.vertices_ && a.adj_ == b.adj_;
    }

  private:
    std::vector<std::string> vertices_;
    std::vector<Bitset> adj_;
};

/// Map from pattern-vertex label to host-vertex label.
using Embedding = std::map<std::string, std::string>;

std::vector<std::string> neighbors(const Graph& g, std::string_view v);
std::size_t degree(const Graph& g, std::string_view v);

/// Throws InputError when `subset` names a vertex not in `g`.
Graph induced_subgraph(const Graph& g, const std::vector<std::string>& subset);

/// Every inclusion-maximal clique, members sorted, list sorted.
std::vector<std::vector<std::string>> maximal_cliques(const Graph& g);

/// Same, as sorted index lists.
std::vector<std::vector<std::size_t>> maximal_clique_indices(const Graph& g);

/// Default bound on the pattern size accepted by find_induced_embedding.
inline constexpr std::size_t default_embedding_guard = 12;

/// Lexicographically least injective map phi with uv in E(pattern) iff
/// phi(u)phi(v) in E(host), if any. Throws GuardExceeded when the pattern
/// has more than `guard` vertices.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host,
                                                std::size_t guard = default_embedding_guard);

/// Edge-list text: `u v` per edge, then `vertex w` for each isolated vertex.
std::string format_edge_list(const Graph& g);

/// Accepts `u v` lines and `vertex w` lines; blank lines and `#` comments are
/// skipped. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

std::string format_dot(const Graph& g);

} // namespace dpophylo
