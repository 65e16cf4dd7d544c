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
#include "dpophylo/interval.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dpophylo {

/// Path a-u-v-b whose middle edge uv lies in no triangle while both u and v
/// have another neighbour. A graph containing one is never the phylogeny
/// graph of a doubly partial order.
struct ObstructionWitness {
    std::string u;
    std::string v;
    std::string a;
    std::string b;

    friend bool operator==(const ObstructionWitness&, const ObstructionWitness&) = default;
};

/// Lexicographically least witness (u, v, a, b), if any. Does not check that
/// `g` is an interval graph.
std::optional<ObstructionWitness> obstruction_theorem4(const Graph& g);

/// Largest point count any exhaustive grid search will accept.
inline constexpr std::size_t grid_search_limit = 6;

/// Exhaustive search over configurations on the grid {1..n}^2 whose used
/// coordinates on each axis are exactly {1..k}. Any configuration of n points
/// reduces to one of these by replacing coordinates with their per-axis ranks,
/// so the search is complete. Returns the first configuration (in enumeration
/// order) whose phylogeny graph is `g`, with vertices in canonical order.
///
/// Throws GuardExceeded unless |V(g)| <= n_max <= grid_search_limit.
/// `jobs` workers split the space; the result does not depend on it.
std::optional<PointConfig> realizable_bruteforce(const Graph& g, std::size_t n_max, unsigned jobs = 1);

/// Doubly partial order whose competition graph is `g` plus one isolated
/// vertex per maximal clique.
struct CompetitionRealization {
    PointConfig config;
    /// Interval representation actually used; endpoints pairwise distinct.
    IntervalAssignment intervals;
    /// Added prey labels, one per maximal clique, in canonical clique order.
    std::vector<std::string> prey;
    std::vector<std::vector<std::string>> cliques;
};

/// Vertex v with interval [a, b] becomes the point (-a, b); maximal clique Q
/// becomes the prey point (-p, p) where p lies strictly inside exactly the
/// intervals of Q. If the endpoints of `representation` are not pairwise
/// distinct they are first renumbered to distinct even integers, with left
/// endpoints ordered before right endpoints at ties.
///
/// Throws InputError if `g` has isolated vertices or `representation` does
/// not realize `g`.
CompetitionRealization chokim_competition_dpo(const Graph& g, const IntervalAssignment& representation);

struct ExtensionResult {
    PointConfig config;
    /// Phylogeny graph of the doubly partial order of `config`.
    Graph extended;
    std::vector<std::string> prey_vertices;
    Embedding embedding;
};

/// Interval supergraph of `g`, containing it as an induced subgraph, that is
/// the phylogeny graph of a doubly partial order. Isolated vertices of `g` are
/// set aside, the rest is realized through chokim_competition_dpo, and the
/// isolated vertices come back as isolated points.
///
/// Throws InputError if `g` is not an interval graph.
ExtensionResult extend_to_dpo_phylogeny(const Graph& g);

struct PdpoWitness {
    std::size_t extra_vertices;
    PointConfig config;
    Graph extended;
    Embedding embedding;
};

/// Least r <= r_max such that some configuration of |V(g)| + r points has a
/// phylogeny graph containing `g` as an induced subgraph. Added vertices get
/// fresh labels; `g`'s vertices keep theirs, so the embedding is the identity.
///
/// Throws GuardExceeded unless |V(g)| + r_max <= grid_search_limit.
std::optional<PdpoWitness> pdpo_search(const Graph& g, std::size_t r_max, unsigned jobs = 1);

/// `count` labels `<prefix>1`, `<prefix>2`, ... none of which is in `taken`;
/// the prefix gains leading underscores until that holds.
std::vector<std::string> fresh_labels(const std::vector<std::string>& taken, std::size_t count,
                                      const std::string& prefix = "z");

} // namespace dpophylo
