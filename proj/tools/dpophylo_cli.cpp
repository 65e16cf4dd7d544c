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

// Command-line front end. Talks to the library only through its C API.

#include "dpophylo/dpophylo.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::ordered_json;

struct InputFailure {
    std::string message;
};

struct Options {
    std::string input;
    std::string out;
    std::string points_out;
    bool dot = false;
    bool timing = false;
    std::uint64_t seed = 0;
    std::size_t n = 10;
    double ties = 0.0;
    std::size_t rmax = 2;
    std::size_t nmax = 6;
    unsigned jobs = 1;
};

struct CString {
    char* p = nullptr;
    ~CString() { dpo_string_free(p); }
    std::string str() const { return p ? std::string(p) : std::string(); }
};

template <class T, void (*Free)(T*)>
struct Handle {
    T* p = nullptr;
    ~Handle() { Free(p); }
};

using Points = Handle<dpo_points, dpo_points_free>;
using Digraph = Handle<dpo_digraph, dpo_digraph_free>;
using Graph = Handle<dpo_graph, dpo_graph_free>;

std::string read_input(const std::string& path)
{
    if (path == "-")
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputFailure{"cannot open '" + path + "'"};
    return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputFailure{"cannot write '" + path + "'"};
    out << text;
}

std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

int fail(dpo_status status)
{
    std::cerr << "error: " << dpo_last_error() << "\n";
    return static_cast<int>(status);
}

// Everything except the timing field is a function of the inputs and flags.
class Report {
  public:
    Report(std::string command, const Options& opt) : opt_(opt), start_(std::chrono::steady_clock::now())
    {
        json_["command"] = std::move(command);
        json_["inputs"] = Json::array();
        json_["flags"] = Json::object();
    }

    void input(const std::string& path, const std::string& contents)
    {
        json_["inputs"].push_back(Json{{"path", path}, {"sha256", sha256_hex(contents)}});
    }

    void flag(const std::string& name, Json value) { json_["flags"][name] = std::move(value); }

    int finish(const std::string& outcome_text, dpo_status status)
    {
        json_["outcome"] = Json::parse(outcome_text);
        json_["exit_code"] = static_cast<int>(status);
        if (opt_.timing) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
            json_["timing_ms"] = ms;
        }
        write_output(opt_.out, json_.dump(2) + "\n");
        if (status != DPO_OK && status != DPO_NEGATIVE)
            std::cerr << "error: " << dpo_last_error() << "\n";
        return static_cast<int>(status);
    }

  private:
    const Options& opt_;
    std::chrono::steady_clock::time_point start_;
    Json json_;
};

int load_points(const Options& opt, Points& points, std::string& text)
{
    text = read_input(opt.input);
    if (auto s = dpo_points_parse_csv(text.c_str(), &points.p); s != DPO_OK)
        return fail(s);
    return 0;
}

int load_graph(const Options& opt, Graph& graph, std::string& text)
{
    text = read_input(opt.input);
    if (auto s = dpo_graph_parse_edge_list(text.c_str(), &graph.p); s != DPO_OK)
        return fail(s);
    return 0;
}

int cmd_build(const Options& opt)
{
    Points points;
    std::string text;
    if (int rc = load_points(opt, points, text))
        return rc;
    Digraph d;
    if (auto s = dpo_digraph_build(points.p, &d.p); s != DPO_OK)
        return fail(s);
    CString out;
    auto s = opt.dot ? dpo_digraph_to_dot(d.p, &out.p) : dpo_digraph_to_arc_list(d.p, &out.p);
    if (s != DPO_OK)
        return fail(s);
    write_output(opt.out, out.str());
    return 0;
}

int cmd_derive(const Options& opt, bool phylogeny)
{
    Points points;
    std::string text;
    if (int rc = load_points(opt, points, text))
        return rc;
    Digraph d;
    if (auto s = dpo_digraph_build(points.p, &d.p); s != DPO_OK)
        return fail(s);
    Graph g;
    if (auto s = phylogeny ? dpo_phylogeny_graph(d.p, &g.p) : dpo_competition_graph(d.p, &g.p); s != DPO_OK)
        return fail(s);
    CString out;
    auto s = opt.dot ? dpo_graph_to_dot(g.p, &out.p) : dpo_graph_to_edge_list(g.p, &out.p);
    if (s != DPO_OK)
        return fail(s);
    write_output(opt.out, out.str());
    return 0;
}

int cmd_intervals(const Options& opt)
{
    Report report("intervals", opt);
    Points points;
    std::string text;
    if (int rc = load_points(opt, points, text))
        return rc;
    report.input(opt.input, text);
    CString json;
    auto s = dpo_intervals_report(points.p, &json.p);
    if (!json.p)
        return fail(s);
    return report.finish(json.str(), s);
}

// Shared shape of the graph-in, report-out commands.
template <class Call>
int graph_report(const Options& opt, Report& report, Call call)
{
    Graph g;
    std::string text;
    if (int rc = load_graph(opt, g, text))
        return rc;
    report.input(opt.input, text);
    CString json, csv;
    auto s = call(g.p, &json.p, &csv.p);
    if (!json.p)
        return fail(s);
    if (csv.p && !opt.points_out.empty())
        write_output(opt.points_out, csv.str());
    return report.finish(json.str(), s);
}

int cmd_check_interval(const Options& opt)
{
    Report report("check-interval", opt);
    return graph_report(opt, report,
                        [](dpo_graph* g, char** json, char**) { return dpo_check_interval(g, json); });
}

int cmd_obstruct(const Options& opt)
{
    Report report("obstruct", opt);
    return graph_report(opt, report, [](dpo_graph* g, char** json, char**) { return dpo_obstruct(g, json); });
}

int cmd_extend(const Options& opt)
{
    Report report("extend", opt);
    return graph_report(opt, report, [](dpo_graph* g, char** json, char** csv) { return dpo_extend(g, json, csv); });
}

int cmd_realize(const Options& opt)
{
    Report report("realize", opt);
    report.flag("nmax", opt.nmax);
    return graph_report(opt, report, [&](dpo_graph* g, char** json, char** csv) {
        return dpo_realize(g, opt.nmax, opt.jobs, json, csv);
    });
}

int cmd_pdpo(const Options& opt)
{
    Report report("pdpo", opt);
    report.flag("rmax", opt.rmax);
    return graph_report(opt, report, [&](dpo_graph* g, char** json, char** csv) {
        return dpo_pdpo(g, opt.rmax, opt.jobs, json, csv);
    });
}

int cmd_gen_points(const Options& opt)
{
    Points points;
    if (auto s = dpo_points_random(opt.seed, opt.n, opt.ties, &points.p); s != DPO_OK)
        return fail(s);
    CString csv;
    if (auto s = dpo_points_to_csv(points.p, &csv.p); s != DPO_OK)
        return fail(s);
    write_output(opt.out, csv.str());
    return 0;
}

int cmd_gen_interval(const Options& opt)
{
    Graph g;
    if (auto s = dpo_graph_random_interval(opt.seed, opt.n, &g.p); s != DPO_OK)
        return fail(s);
    CString text;
    if (auto s = dpo_graph_to_edge_list(g.p, &text.p); s != DPO_OK)
        return fail(s);
    write_output(opt.out, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Doubly partial orders, their competition and phylogeny graphs, and interval representations"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* sub, const char* what) {
        sub->add_option("input", opt.input, what)->required();
        sub->add_option("--out,-o", opt.out, "Write the result here instead of standard output");
    };

    auto* build = app.add_subcommand("build", "Arc list of the doubly partial order of a points CSV");
    add_io(build, "Points CSV (label,x1,x2), or - for stdin");
    build->add_flag("--dot", opt.dot, "Emit DOT instead of an arc list");

    auto* comp = app.add_subcommand("comp", "Competition graph edge list of a points CSV");
    add_io(comp, "Points CSV, or - for stdin");
    comp->add_flag("--dot", opt.dot, "Emit DOT instead of an edge list");

    auto* phylo = app.add_subcommand("phylo", "Phylogeny graph edge list of a points CSV");
    add_io(phylo, "Points CSV, or - for stdin");
    phylo->add_flag("--dot", opt.dot, "Emit DOT instead of an edge list");

    auto* intervals = app.add_subcommand("intervals", "Certified interval representation of the phylogeny graph");
    add_io(intervals, "Points CSV, or - for stdin");

    auto* check = app.add_subcommand("check-interval", "Decide whether an edge-list graph is an interval graph");
    add_io(check, "Edge list, or - for stdin");

    auto* obstruct = app.add_subcommand("obstruct", "Find a path a-u-v-b whose middle edge lies in no triangle");
    add_io(obstruct, "Edge list, or - for stdin");

    auto* extend = app.add_subcommand("extend", "Extend an interval graph to a DPO phylogeny graph");
    add_io(extend, "Edge list, or - for stdin");

    auto* realize = app.add_subcommand("realize", "Exhaustively search for a DPO whose phylogeny graph is the input");
    add_io(realize, "Edge list, or - for stdin");
    realize->add_option("--nmax", opt.nmax, "Vertex-count guard (at most 6)");

    auto* pdpo = app.add_subcommand("pdpo", "Least number of extra vertices for an induced DPO phylogeny extension");
    add_io(pdpo, "Edge list, or - for stdin");
    pdpo->add_option("--rmax", opt.rmax, "Largest number of extra vertices to try");

    for (auto* sub : {extend, realize, pdpo})
        sub->add_option("--points-out", opt.points_out, "Also write the witness points CSV here");
    for (auto* sub : {realize, pdpo})
        sub->add_option("--jobs,-j", opt.jobs, "Worker threads; the result does not depend on it")
            ->check(CLI::Range(1u, 256u));
    for (auto* sub : {intervals, check, obstruct, extend, realize, pdpo})
        sub->add_flag("--timing", opt.timing, "Add wall-clock milliseconds to the report");

    auto* gen_points = app.add_subcommand("gen-points", "Random points CSV");
    gen_points->add_option("--seed", opt.seed, "Random seed")->required();
    gen_points->add_option("--n", opt.n, "Number of points");
    gen_points->add_option("--ties", opt.ties, "Probability of copying an existing coordinate, per axis")
        ->check(CLI::Range(0.0, 1.0));
    gen_points->add_option("--out,-o", opt.out, "Output file");

    auto* gen_interval = app.add_subcommand("gen-interval", "Random interval graph edge list");
    gen_interval->add_option("--seed", opt.seed, "Random seed")->required();
    gen_interval->add_option("--n", opt.n, "Number of vertices");
    gen_interval->add_option("--out,-o", opt.out, "Output file");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : DPO_INPUT_ERROR;
    }

    try {
        if (build->parsed())
            return cmd_build(opt);
        if (comp->parsed())
            return cmd_derive(opt, false);
        if (phylo->parsed())
            return cmd_derive(opt, true);
        if (intervals->parsed())
            return cmd_intervals(opt);
        if (check->parsed())
            return cmd_check_interval(opt);
        if (obstruct->parsed())
            return cmd_obstruct(opt);
        if (extend->parsed())
            return cmd_extend(opt);
        if (realize->parsed())
            return cmd_realize(opt);
        if (pdpo->parsed())
            return cmd_pdpo(opt);
        if (gen_points->parsed())
            return cmd_gen_points(opt);
        if (gen_interval->parsed())
            return cmd_gen_interval(opt);
    }
    catch (const InputFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return DPO_INPUT_ERROR;
    }
    return DPO_INPUT_ERROR;
}
