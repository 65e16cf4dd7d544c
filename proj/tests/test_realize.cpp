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
#include "dpophylo/generate.hpp"
#include "dpophylo/interval.hpp"
#include "dpophylo/realize.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace dpophylo;
using fixtures::pt;
using Names = std::vector<std::string>;

namespace {

Interval iv(long lo, long hi)
{
    return Interval(Rational(lo), Rational(hi));
}

// Point of the prey vertex added for the clique with exactly these members.
Point2 prey_of(const CompetitionRealization& r, const Names& clique)
{
    for (std::size_t i = 0; i < r.cliques.size(); ++i)
        if (r.cliques[i] == clique)
            return r.config.point(r.prey[i]);
    FAIL("no prey for clique");
    return {};
}

void check_extension(const Graph& g, const ExtensionResult& ext)
{
    auto phylo = phylogeny_graph(build_dpo(ext.config));
    CHECK(phylo == ext.extended);
    CHECK(induced_subgraph(ext.extended, g.vertices()) == g);
    CHECK(recognize_interval(ext.extended));
    for (const auto& z : ext.prey_vertices) {
        auto nz = neighbors(ext.extended, z);
        for (std::size_t i = 0; i < nz.size(); ++i)
            for (std::size_t j = i + 1; j < nz.size(); ++j)
                CHECK(ext.extended.has_edge(nz[i], nz[j]));
    }
}

} // namespace

TEST_CASE("obstruction examples")
{
    auto p4 = obstruction_theorem4(fixtures::p4());
    REQUIRE(p4);
    CHECK(*p4 == ObstructionWitness{"u", "v", "a", "b"});
    CHECK_FALSE(obstruction_theorem4(fixtures::k(3)));
    CHECK_FALSE(obstruction_theorem4(fixtures::claw()));
    auto c4 = obstruction_theorem4(fixtures::c4());
    REQUIRE(c4);
    CHECK(*c4 == ObstructionWitness{"a", "b", "d", "c"});
}

TEST_CASE("realizable_bruteforce")
{
    auto k3 = realizable_bruteforce(fixtures::k(3), 6);
    REQUIRE(k3);
    CHECK(phylogeny_graph(build_dpo(*k3)) == fixtures::k(3));
    auto k2 = realizable_bruteforce(fixtures::k(2), 6);
    REQUIRE(k2);
    CHECK(phylogeny_graph(build_dpo(*k2)) == fixtures::k(2));
    CHECK_FALSE(realizable_bruteforce(fixtures::p4(), 6));
    CHECK_THROWS_AS(realizable_bruteforce(fixtures::k(3), 7), GuardExceeded);
    CHECK_THROWS_AS(realizable_bruteforce(fixtures::k(4), 3), GuardExceeded);
    CHECK(format_points_csv(*realizable_bruteforce(fixtures::k(3), 6, 1)) ==
          format_points_csv(*realizable_bruteforce(fixtures::k(3), 6, 4)));
}

TEST_CASE("construction points for P4")
{
    IntervalAssignment rep{{"a", iv(0, 2)}, {"u", iv(1, 4)}, {"v", iv(3, 6)}, {"b", iv(5, 7)}};
    auto r = chokim_competition_dpo(fixtures::p4(), rep);
    CHECK(r.config.point("a") == pt(0, 2));
    CHECK(r.config.point("u") == pt(-1, 4));
    CHECK(r.config.point("v") == pt(-3, 6));
    CHECK(r.config.point("b") == pt(-5, 7));
    CHECK(prey_of(r, {"a", "u"}) == pt("-3/2", "3/2"));
    CHECK(prey_of(r, {"u", "v"}) == pt("-7/2", "7/2"));
    CHECK(prey_of(r, {"b", "v"}) == pt("-11/2", "11/2"));
    CHECK(r.prey.size() == 3);
}

TEST_CASE("construction prey sits at the midpoint of the clique's common interval")
{
    IntervalAssignment k2{{"a", iv(0, 2)}, {"b", iv(1, 3)}};
    auto r2 = chokim_competition_dpo(fixtures::k(2), k2);
    CHECK(prey_of(r2, {"a", "b"}) == pt("-3/2", "3/2"));

    IntervalAssignment k3{{"a", iv(0, 4)}, {"b", iv(1, 5)}, {"c", iv(2, 6)}};
    auto r3 = chokim_competition_dpo(fixtures::k(3), k3);
    CHECK(prey_of(r3, {"a", "b", "c"}) == pt(-3, 3));
}

TEST_CASE("construction input errors")
{
    auto lonely = fixtures::graph({"a", "b", "w"}, {{"a", "b"}});
    IntervalAssignment rep{{"a", iv(0, 1)}, {"b", iv(1, 2)}, {"w", iv(5, 5)}};
    CHECK_THROWS_AS(chokim_competition_dpo(lonely, rep), InputError);
    IntervalAssignment wrong{{"a", iv(0, 1)}, {"u", iv(2, 3)}, {"v", iv(3, 4)}, {"b", iv(4, 5)}};
    CHECK_THROWS_AS(chokim_competition_dpo(fixtures::p4(), wrong), InputError);
}

TEST_CASE("construction with shared endpoints is renumbered")
{
    IntervalAssignment rep{{"a", iv(0, 1)}, {"u", iv(1, 2)}, {"v", iv(2, 3)}, {"b", iv(3, 3)}};
    auto r = chokim_competition_dpo(fixtures::p4(), rep);
    auto comp = competition_graph(build_dpo(r.config));
    CHECK(induced_subgraph(comp, fixtures::p4().vertices()) == fixtures::p4());
    for (const auto& z : r.prey)
        CHECK(degree(comp, z) == 0);
}

TEST_CASE("extend_to_dpo_phylogeny examples")
{
    auto p4 = extend_to_dpo_phylogeny(fixtures::p4());
    CHECK(p4.extended.vertex_count() == 7);
    CHECK(p4.extended.edge_count() == 9);
    CHECK(p4.prey_vertices.size() == 3);
    check_extension(fixtures::p4(), p4);

    auto k3 = extend_to_dpo_phylogeny(fixtures::k(3));
    CHECK(k3.extended.vertex_count() == 4);
    CHECK(k3.extended.edge_count() == 6);
    check_extension(fixtures::k(3), k3);

    auto k2 = extend_to_dpo_phylogeny(fixtures::k(2));
    CHECK(k2.extended.edge_count() == 3);
    check_extension(fixtures::k(2), k2);

    auto lonely = fixtures::graph({"a", "b", "w", "x"}, {{"a", "b"}});
    auto ext = extend_to_dpo_phylogeny(lonely);
    check_extension(lonely, ext);
    CHECK(degree(ext.extended, "w") == 0);
    CHECK(degree(ext.extended, "x") == 0);

    CHECK_THROWS_AS(extend_to_dpo_phylogeny(fixtures::c4()), InputError);
}

TEST_CASE("extension of random interval graphs")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto g = random_interval_graph(seed, 1 + seed % 20);
        auto ext = extend_to_dpo_phylogeny(g);
        check_extension(g, ext);
        std::size_t nonisolated_cliques = 0;
        for (const auto& c : maximal_cliques(g))
            if (c.size() > 1 || degree(g, c.front()) > 0)
                ++nonisolated_cliques;
        CHECK(ext.prey_vertices.size() == nonisolated_cliques);
    }
}

TEST_CASE("pdpo_search")
{
    auto k3 = pdpo_search(fixtures::k(3), 2);
    REQUIRE(k3);
    CHECK(k3->extra_vertices == 0);
    auto k2 = pdpo_search(fixtures::k(2), 2);
    REQUIRE(k2);
    CHECK(k2->extra_vertices == 0);

    auto p4 = pdpo_search(fixtures::p4(), 2);
    REQUIRE(p4);
    CHECK(p4->extra_vertices == 1);
    CHECK(phylogeny_graph(build_dpo(p4->config)) == p4->extended);
    Names image;
    for (const auto& [from, to] : p4->embedding)
        image.push_back(to);
    auto sub = induced_subgraph(p4->extended, image);
    CHECK(sub.edge_count() == 3);

    CHECK_THROWS_AS(pdpo_search(fixtures::k(5), 2), GuardExceeded);
    CHECK(format_points_csv(pdpo_search(fixtures::p4(), 2, 1)->config) ==
          format_points_csv(pdpo_search(fixtures::p4(), 2, 4)->config));
}

TEST_CASE("pdpo_search succeeds within the clique count")
{
    auto p3 = fixtures::graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto cliques = maximal_cliques(p3).size();
    auto w = pdpo_search(p3, cliques);
    REQUIRE(w);
    CHECK(w->extra_vertices <= cliques);
}

TEST_CASE("fresh_labels")
{
    CHECK(fresh_labels({"a", "b"}, 2) == Names{"z1", "z2"});
    auto clash = fresh_labels({"z1", "a"}, 2);
    CHECK(clash.size() == 2);
    CHECK(clash[0] != "z1");
    CHECK(clash[1] != "z1");
}
