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

#include "cli_runner.hpp"
#include "oracles.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

using cli::quote;
using cli::run;

TEST_CASE("build, comp and phylo")
{
    cli::TempDir dir;
    auto pts = quote(dir.write("chain.csv", "z,1,1\nu,2,3\nv,4,5\n"));
    auto build = run("build " + pts);
    CHECK(build.exit_code == 0);
    CHECK(build.out == "u z\nv z\nv u\n");
    CHECK(run("comp " + pts).out == "u v\nvertex z\n");
    CHECK(run("phylo " + pts).out == "u v\nu z\nv z\n");

    auto dot = oracle::parse_dot(run("build --dot " + pts).out);
    CHECK(dot.directed);
    CHECK(dot.edges.size() == 3);
    auto pdot = oracle::parse_dot(run("phylo --dot " + pts).out);
    CHECK_FALSE(pdot.directed);
    CHECK(dpophylo::Graph(pdot.nodes, pdot.edges) == dpophylo::parse_edge_list("u v\nu z\nv z\n"));

    auto out = dir.path("arcs.txt");
    CHECK(run("build " + pts + " --out " + quote(out)).exit_code == 0);
    CHECK(cli::slurp(out) == build.out);
}

TEST_CASE("input errors exit with 2")
{
    cli::TempDir dir;
    CHECK(run("build " + quote(dir.write("bad.csv", "a,1//2,3\n"))).exit_code == 2);
    CHECK(run("build " + quote(dir.path("missing.csv"))).exit_code == 2);
    CHECK(run("check-interval " + quote(dir.write("loop.txt", "a a\n"))).exit_code == 2);
    CHECK(run("realize --nmax 9 " + quote(dir.write("k2.txt", "a b\n"))).exit_code != 0);
    CHECK(run("no-such-command").exit_code != 0);
}

TEST_CASE("empty inputs are valid")
{
    cli::TempDir dir;
    auto empty = quote(dir.write("empty.csv", ""));
    auto r = run("build " + empty);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(run("intervals " + empty).exit_code == 0);
}

TEST_CASE("decision commands use the documented exit codes")
{
    cli::TempDir dir;
    auto p4 = quote(dir.write("p4.txt", "a u\nu v\nv b\n"));
    auto c4 = quote(dir.write("c4.txt", "a b\nb c\nc d\nd a\n"));

    auto check = run("check-interval " + c4);
    CHECK(check.exit_code == 1);
    auto report = nlohmann::json::parse(check.out);
    CHECK(report["command"] == "check-interval");
    CHECK(report["exit_code"] == 1);
    CHECK(report["outcome"]["interval"] == false);
    CHECK(report["inputs"][0]["sha256"].get<std::string>().size() == 64);
    CHECK_FALSE(report.contains("timing_ms"));

    CHECK(run("check-interval " + p4).exit_code == 0);
    CHECK(run("obstruct " + p4).exit_code == 0);
    CHECK(run("realize " + p4).exit_code == 1);
    CHECK(run("extend " + c4).exit_code == 1);
    CHECK(run("pdpo --rmax 0 " + p4).exit_code == 1);
    CHECK(run("pdpo --rmax 2 " + quote(dir.write("k6.txt", "a b\nc d\ne f\n"))).exit_code == 3);

    auto timed = nlohmann::json::parse(run("obstruct --timing " + p4).out);
    CHECK(timed.contains("timing_ms"));
}

TEST_CASE("reports replay byte for byte")
{
    cli::TempDir dir;
    auto p4 = quote(dir.write("p4.txt", "a u\nu v\nv b\n"));
    CHECK(run("pdpo " + p4).out == run("pdpo -j 4 " + p4).out);
    CHECK(run("extend " + p4).out == run("extend " + p4).out);
    auto pts = quote(dir.write("pts.csv", run("gen-points --seed 5 --n 25 --ties 0.3").out));
    CHECK(run("intervals " + pts).out == run("intervals " + pts).out);
}

TEST_CASE("extend writes a configuration whose phylogeny graph is the extension")
{
    cli::TempDir dir;
    auto g = quote(dir.write("g.txt", run("gen-interval --seed 12 --n 9").out));
    auto csv = dir.path("ext.csv");
    auto r = run("extend " + g + " --points-out " + quote(csv));
    REQUIRE(r.exit_code == 0);
    auto report = nlohmann::json::parse(r.out);
    CHECK(run("phylo " + quote(csv)).out == report["outcome"]["extended_edge_list"].get<std::string>());
    CHECK(report["outcome"]["extended_interval"] == true);
}

TEST_CASE("generators are deterministic and read from stdin")
{
    auto a = run("gen-points --seed 3 --n 8");
    CHECK(a.exit_code == 0);
    CHECK(a.out == run("gen-points --seed 3 --n 8").out);
    CHECK(a.out != run("gen-points --seed 4 --n 8").out);
    cli::TempDir dir;
    auto path = quote(dir.write("pts.csv", a.out));
    CHECK(run("build - < " + path).out == run("build " + path).out);
}
