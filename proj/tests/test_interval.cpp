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

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace dpophylo;
using fixtures::pt;

namespace {

Interval iv(long lo, long hi)
{
    return Interval(Rational(lo), Rational(hi));
}

PointConfig separation_config()
{
    return fixtures::config({{"x", pt(2, 4)}, {"a", pt(1, 3)}, {"y", pt(3, 1)}, {"b", pt(2, 0)}});
}

} // namespace

TEST_CASE("f_map")
{
    CHECK(f_map(pt(1, 4)) == 3);
    CHECK(f_map(pt(3, 1)) == -2);
    CHECK(f_map(pt("1/2", "1/3")) == Rational(-1, 6));
}

TEST_CASE("Interval")
{
    CHECK_THROWS_AS(iv(2, 1), InputError);
    CHECK(iv(0, 1).intersects(iv(1, 2)));
    CHECK_FALSE(iv(0, 1).intersects(iv(2, 3)));
    CHECK(iv(3, 3).intersects(iv(3, 3)));
}

TEST_CASE("phylogeny_intervals")
{
    SUBCASE("hull of the closed out-neighborhood")
    {
        auto config = separation_config();
        auto j = phylogeny_intervals(build_dpo(config), config);
        CHECK(j.at("x") == iv(2, 2));
        CHECK(j.at("y") == iv(-2, -2));
        CHECK(f_map(meet(config.point("x"), config.point("y"))) == -1);
    }
    SUBCASE("chain")
    {
        auto config = fixtures::chain();
        auto j = phylogeny_intervals(build_dpo(config), config);
        CHECK(j.at("z") == iv(0, 0));
        CHECK(j.at("u") == iv(0, 1));
        CHECK(j.at("v") == iv(0, 1));
    }
    SUBCASE("a single point gets a sentinel above every f value")
    {
        auto config = fixtures::config({{"a", pt(0, 0)}});
        auto j = phylogeny_intervals(build_dpo(config), config);
        CHECK(j.at("a") == iv(1, 1));
    }
    SUBCASE("isolated points get distinct sentinels")
    {
        auto config = fixtures::config({{"a", pt(1, 1)}, {"b", pt(2, 2)}, {"c", pt(3, 1)}, {"d", pt(4, 0)}});
        auto j = phylogeny_intervals(build_dpo(config), config);
        CHECK(j.at("c") == iv(1, 1));
        CHECK(j.at("d") == iv(2, 2));
    }
}

TEST_CASE("intersection_graph")
{
    IntervalAssignment a{{"p", iv(0, 1)}, {"q", iv(1, 2)}, {"r", iv(3, 4)}};
    auto g = intersection_graph(a);
    CHECK(g.has_edge("p", "q"));
    CHECK_FALSE(g.has_edge("q", "r"));
    CHECK(g.edge_count() == 1);
    CHECK(intersection_graph({}).vertex_count() == 0);
}

TEST_CASE("verify_separation")
{
    SUBCASE("strict panel")
    {
        auto config = separation_config();
        auto d = build_dpo(config);
        auto report = verify_separation(d, config, phylogeny_intervals(d, config));
        CHECK(report.ok());
        bool found = false;
        for (const auto& c : report.checked)
            if (c.upper == "x" && c.lower == "y") {
                found = true;
                CHECK(c.panel == SeparationPanel::Strict);
                CHECK(c.meet_value == -1);
            }
        CHECK(found);
    }
    SUBCASE("first-coordinate tie")
    {
        auto config = fixtures::config({{"x", pt(1, 3)}, {"y", pt(1, 1)}, {"a", pt(0, 2)}, {"w", pt(2, 2)}});
        auto d = build_dpo(config);
        auto report = verify_separation(d, config, phylogeny_intervals(d, config));
        CHECK(report.ok());
        bool tie = false;
        for (const auto& c : report.checked)
            if (c.panel == SeparationPanel::FirstTie)
                tie = true;
        CHECK(tie);
    }
    SUBCASE("a tampered assignment is caught")
    {
        auto config = separation_config();
        auto d = build_dpo(config);
        auto j = phylogeny_intervals(d, config);
        j.at("y") = iv(-2, 5);
        auto report = verify_separation(d, config, j);
        REQUIRE_FALSE(report.ok());
        CHECK_FALSE(report.violation->reason.empty());
    }
    SUBCASE("names")
    {
        CHECK(std::string(to_string(SeparationPanel::SecondTie)) == "second_coordinate_tie");
        CHECK(std::string(to_string(SeparationCase::LowerAboveMeet)) == "lower_above_meet");
    }
}

TEST_CASE("recognize_interval examples")
{
    auto p4 = recognize_interval(fixtures::p4());
    REQUIRE(p4);
    CHECK(intersection_graph(*p4) == fixtures::p4());
    CHECK_FALSE(recognize_interval(fixtures::c4()));
    CHECK_FALSE(is_chordal(fixtures::c4()));
    auto claw = recognize_interval(fixtures::claw());
    REQUIRE(claw);
    CHECK(intersection_graph(*claw) == fixtures::claw());
    CHECK(recognize_interval(Graph{}));
}

TEST_CASE("recognize_interval agrees with the clique-order oracle")
{
    std::mt19937_64 rng(3);
    int positives = 0, negatives = 0;
    for (int trial = 0; trial < 600; ++trial) {
        std::size_t n = 1 + trial % 8;
        auto g = oracle::random_graph(rng, n, 0.25 + 0.1 * (trial % 6));
        auto rep = recognize_interval(g);
        bool expected = oracle::is_interval(g);
        CHECK(rep.has_value() == expected);
        if (rep)
            CHECK(intersection_graph(*rep) == g);
        if (expected) {
            ++positives;
            CHECK(is_chordal(g));
        }
        else
            ++negatives;
    }
    CHECK(positives > 50);
    CHECK(negatives > 50);
}

TEST_CASE("phylogeny intervals represent the phylogeny graph")
{
    std::set<SeparationPanel> panels;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        PointGenOptions opt;
        opt.points = 1 + seed % 40;
        opt.tie_fraction = seed % 2 ? 0.35 : 0.0;
        auto config = random_point_config(seed, opt);
        auto d = build_dpo(config);
        auto j = phylogeny_intervals(d, config);
        CHECK(intersection_graph(j) == phylogeny_graph(d));
        auto report = verify_separation(d, config, j);
        CHECK(report.ok());
        for (const auto& c : report.checked)
            panels.insert(c.panel);
        CHECK(recognize_interval(phylogeny_graph(d)));
    }
    CHECK(panels.size() == 3);
}

TEST_CASE("diagonal translation leaves the intervals unchanged")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        PointGenOptions opt;
        opt.points = 3 + seed % 20;
        opt.tie_fraction = 0.2;
        auto config = random_point_config(seed, opt);
        Rational t(static_cast<long>(seed), 3);
        std::vector<PointConfig::Entry> moved;
        for (const auto& e : config.entries())
            moved.push_back({e.label, Point2{e.point.x1 + t, e.point.x2 + t}});
        PointConfig shifted(moved);
        CHECK(phylogeny_intervals(build_dpo(config), config) == phylogeny_intervals(build_dpo(shifted), shifted));
    }
}
