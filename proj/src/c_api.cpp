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

#include "dpophylo/dpophylo.h"

#include "dpophylo/derive.hpp"
#include "dpophylo/generate.hpp"
#include "dpophylo/reports.hpp"

#include <cstdlib>
#include <cstring>
#include <new>

struct dpo_points {
    dpophylo::PointConfig value;
};

struct dpo_digraph {
    dpophylo::Digraph value;
};

struct dpo_graph {
    dpophylo::Graph value;
};

namespace {

using namespace dpophylo;

thread_local std::string last_error;

char* copy_out(const std::string& s)
{
    auto* buf = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buf)
        throw std::bad_alloc();
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return buf;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

// Runs `body` and maps exceptions onto status codes.
template <class Body>
dpo_status guarded(Body&& body)
{
    try {
        last_error.clear();
        return body();
    }
    catch (const InputError& e) {
        last_error = e.what();
        return DPO_INPUT_ERROR;
    }
    catch (const GuardExceeded& e) {
        last_error = e.what();
        return DPO_GUARD_EXCEEDED;
    }
    catch (const std::exception& e) {
        last_error = e.what();
        return DPO_INTERNAL_ERROR;
    }
    catch (...) {
        last_error = "unknown error";
        return DPO_INTERNAL_ERROR;
    }
}

dpo_status null_argument()
{
    last_error = "null argument";
    return DPO_INPUT_ERROR;
}

} // namespace

extern "C" {

const char* dpo_version(void)
{
    return "1.0.0";
}

const char* dpo_last_error(void)
{
    return last_error.c_str();
}

void dpo_string_free(char* s)
{
    std::free(s);
}

dpo_status dpo_points_parse_csv(const char* text, dpo_points** out)
{
    if (!text || !out)
        return null_argument();
    return guarded([&] {
        *out = new dpo_points{parse_points_csv(text)};
        return DPO_OK;
    });
}

dpo_status dpo_points_random(uint64_t seed, size_t points, double tie_fraction, dpo_points** out)
{
    if (!out)
        return null_argument();
    return guarded([&] {
        PointGenOptions options;
        options.points = points;
        options.tie_fraction = tie_fraction;
        *out = new dpo_points{random_point_config(seed, options)};
        return DPO_OK;
    });
}

void dpo_points_free(dpo_points* points)
{
    delete points;
}

size_t dpo_points_size(const dpo_points* points)
{
    return points ? points->value.size() : 0;
}

dpo_status dpo_points_to_csv(const dpo_points* points, char** out)
{
    if (!points || !out)
        return null_argument();
    return guarded([&] {
        *out = copy_out(format_points_csv(points->value));
        return DPO_OK;
    });
}

dpo_status dpo_digraph_build(const dpo_points* points, dpo_digraph** out)
{
    if (!points || !out)
        return null_argument();
    return guarded([&] {
        *out = new dpo_digraph{build_dpo(points->value)};
        return DPO_OK;
    });
}

void dpo_digraph_free(dpo_digraph* d)
{
    delete d;
}

size_t dpo_digraph_arc_count(const dpo_digraph* d)
{
    return d ? d->value.arc_count() : 0;
}

dpo_status dpo_digraph_to_arc_list(const dpo_digraph* d, char** out)
{
    if (!d || !out)
        return null_argument();
    return guarded([&] {
        *out = copy_out(format_arc_list(d->value));
        return DPO_OK;
    });
}

dpo_status dpo_digraph_to_dot(const dpo_digraph* d, char** out)
{
    if (!d || !out)
        return null_argument();
    return guarded([&] {
        *out = copy_out(format_dot(d->value));
        return DPO_OK;
    });
}

dpo_status dpo_digraph_out_neighborhood(const dpo_digraph* d, const char* vertex, char** out)
{
    if (!d || !vertex || !out)
        return null_argument();
    return guarded([&] {
        std::string text;
        for (const auto& v : out_neighborhood(d->value, vertex))
            text += v + "\n";
        *out = copy_out(text);
        return DPO_OK;
    });
}

dpo_status dpo_competition_graph(const dpo_digraph* d, dpo_graph** out)
{
    if (!d || !out)
        return null_argument();
    return guarded([&] {
        *out = new dpo_graph{competition_graph(d->value)};
        return DPO_OK;
    });
}

dpo_status dpo_phylogeny_graph(const dpo_digraph* d, dpo_graph** out)
{
    if (!d || !out)
        return null_argument();
    return guarded([&] {
        *out = new dpo_graph{phylogeny_graph(d->value)};
        return DPO_OK;
    });
}

dpo_status dpo_graph_parse_edge_list(const char* text, dpo_graph** out)
{
    if (!text || !out)
        return null_argument();
    return guarded([&] {
        *out = new dpo_graph{parse_edge_list(text)};
        return DPO_OK;
    });
}

dpo_status dpo_graph_random_interval(uint64_t seed, size_t vertices, dpo_graph** out)
{
    if (!out)
        return null_argument();
    return guarded([&] {
        *out = new dpo_graph{random_interval_graph(seed, vertices)};
        return DPO_OK;
    });
}

void dpo_graph_free(dpo_graph* g)
{
    delete g;
}

size_t dpo_graph_vertex_count(const dpo_graph* g)
{
    return g ? g->value.vertex_count() : 0;
}

size_t dpo_graph_edge_count(const dpo_graph* g)
{
    return g ? g->value.edge_count() : 0;
}

dpo_status dpo_graph_to_edge_list(const dpo_graph* g, char** out)
{
    if (!g || !out)
        return null_argument();
    return guarded([&] {
        *out = copy_out(format_edge_list(g->value));
        return DPO_OK;
    });
}

dpo_status dpo_graph_to_dot(const dpo_graph* g, char** out)
{
    if (!g || !out)
        return null_argument();
    return guarded([&] {
        *out = copy_out(format_dot(g->value));
        return DPO_OK;
    });
}

dpo_status dpo_intervals_report(const dpo_points* points, char** json_out)
{
    if (!points || !json_out)
        return null_argument();
    return guarded([&] {
        auto outcome = intervals_outcome(points->value);
        *json_out = copy_out(dump(outcome.json));
        if (!outcome.verified) {
            last_error = "interval representation failed its verification";
            return DPO_INTERNAL_ERROR;
        }
        return DPO_OK;
    });
}

dpo_status dpo_check_interval(const dpo_graph* g, char** json_out)
{
    if (!g || !json_out)
        return null_argument();
    return guarded([&] {
        Json j;
        auto assignment = recognize_interval(g->value);
        j["interval"] = assignment.has_value();
        j["chordal"] = assignment ? true : is_chordal(g->value);
        j["assignment"] = assignment ? to_json(*assignment) : Json(nullptr);
        *json_out = copy_out(dump(j));
        return assignment ? DPO_OK : DPO_NEGATIVE;
    });
}

dpo_status dpo_obstruct(const dpo_graph* g, char** json_out)
{
    if (!g || !json_out)
        return null_argument();
    return guarded([&] {
        Json j;
        auto witness = obstruction_theorem4(g->value);
        j["interval"] = recognize_interval(g->value).has_value();
        if (witness)
            j["obstruction"] = Json{{"u", witness->u}, {"v", witness->v}, {"a", witness->a}, {"b", witness->b}};
        else
            j["obstruction"] = nullptr;
        j["excluded_as_dpo_phylogeny_graph"] = witness.has_value();
        *json_out = copy_out(dump(j));
        return witness ? DPO_OK : DPO_NEGATIVE;
    });
}

dpo_status dpo_extend(const dpo_graph* g, char** json_out, char** csv_out)
{
    if (!g || !json_out || !csv_out)
        return null_argument();
    return guarded([&] {
        Json j;
        if (!recognize_interval(g->value)) {
            j["interval"] = false;
            *json_out = copy_out(dump(j));
            return DPO_NEGATIVE;
        }
        auto result = extend_to_dpo_phylogeny(g->value);
        const auto csv = format_points_csv(result.config);
        j["interval"] = true;
        j["vertices"] = g->value.vertex_count();
        j["extended_vertices"] = result.extended.vertex_count();
        j["extended_edges"] = result.extended.edge_count();
        j["prey_vertices"] = result.prey_vertices;
        j["embedding"] = to_json(result.embedding);
        j["extended_interval"] = recognize_interval(result.extended).has_value();
        j["extended_edge_list"] = format_edge_list(result.extended);
        j["points_csv"] = csv;
        *json_out = copy_out(dump(j));
        *csv_out = copy_out(csv);
        return DPO_OK;
    });
}

dpo_status dpo_realize(const dpo_graph* g, size_t n_max, unsigned jobs, char** json_out, char** csv_out)
{
    if (!g || !json_out || !csv_out)
        return null_argument();
    return guarded([&] {
        auto config = realizable_bruteforce(g->value, n_max, jobs);
        Json j;
        j["n_max"] = n_max;
        j["realizable"] = config.has_value();
        j["points_csv"] = config ? Json(format_points_csv(*config)) : Json(nullptr);
        *json_out = copy_out(dump(j));
        if (!config)
            return DPO_NEGATIVE;
        *csv_out = copy_out(format_points_csv(*config));
        return DPO_OK;
    });
}

dpo_status dpo_pdpo(const dpo_graph* g, size_t r_max, unsigned jobs, char** json_out, char** csv_out)
{
    if (!g || !json_out || !csv_out)
        return null_argument();
    return guarded([&] {
        auto witness = pdpo_search(g->value, r_max, jobs);
        Json j;
        j["r_max"] = r_max;
        if (!witness) {
            j["r"] = nullptr;
            *json_out = copy_out(dump(j));
            return DPO_NEGATIVE;
        }
        const auto csv = format_points_csv(witness->config);
        j["r"] = witness->extra_vertices;
        j["embedding"] = to_json(witness->embedding);
        j["extended_edge_list"] = format_edge_list(witness->extended);
        j["points_csv"] = csv;
        *json_out = copy_out(dump(j));
        *csv_out = copy_out(csv);
        return DPO_OK;
    });
}

} // extern "C"
