/*
 * Copyright 2026 The dpophylo Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libdpophylo.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a dpo_status; on anything but DPO_OK or
 * DPO_NEGATIVE, dpo_last_error() describes the failure (per thread).
 * Strings handed out through char** parameters are owned by the caller and
 * released with dpo_string_free. Output parameters are left untouched on
 * failure unless documented otherwise.
 */

#ifndef DPOPHYLO_H
#define DPOPHYLO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DPO_API __declspec(dllexport)
#else
#define DPO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpo_status {
    DPO_OK = 0,
    DPO_NEGATIVE = 1,       /* well-formed question, answer is no */
    DPO_INPUT_ERROR = 2,
    DPO_GUARD_EXCEEDED = 3,
    DPO_INTERNAL_ERROR = 4
} dpo_status;

typedef struct dpo_points dpo_points;
typedef struct dpo_digraph dpo_digraph;
typedef struct dpo_graph dpo_graph;

DPO_API const char* dpo_version(void);
DPO_API const char* dpo_last_error(void);
DPO_API void dpo_string_free(char* s);

/* Point configurations. */
DPO_API dpo_status dpo_points_parse_csv(const char* text, dpo_points** out);
DPO_API dpo_status dpo_points_random(uint64_t seed, size_t points, double tie_fraction, dpo_points** out);
DPO_API void dpo_points_free(dpo_points* points);
DPO_API size_t dpo_points_size(const dpo_points* points);
DPO_API dpo_status dpo_points_to_csv(const dpo_points* points, char** out);

/* Doubly partial orders. */
DPO_API dpo_status dpo_digraph_build(const dpo_points* points, dpo_digraph** out);
DPO_API void dpo_digraph_free(dpo_digraph* d);
DPO_API size_t dpo_digraph_arc_count(const dpo_digraph* d);
DPO_API dpo_status dpo_digraph_to_arc_list(const dpo_digraph* d, char** out);
DPO_API dpo_status dpo_digraph_to_dot(const dpo_digraph* d, char** out);
/* Prey of `vertex`, one label per line. */
DPO_API dpo_status dpo_digraph_out_neighborhood(const dpo_digraph* d, const char* vertex, char** out);
DPO_API dpo_status dpo_competition_graph(const dpo_digraph* d, dpo_graph** out);
DPO_API dpo_status dpo_phylogeny_graph(const dpo_digraph* d, dpo_graph** out);

/* Undirected graphs. */
DPO_API dpo_status dpo_graph_parse_edge_list(const char* text, dpo_graph** out);
DPO_API dpo_status dpo_graph_random_interval(uint64_t seed, size_t vertices, dpo_graph** out);
DPO_API void dpo_graph_free(dpo_graph* g);
DPO_API size_t dpo_graph_vertex_count(const dpo_graph* g);
DPO_API size_t dpo_graph_edge_count(const dpo_graph* g);
DPO_API dpo_status dpo_graph_to_edge_list(const dpo_graph* g, char** out);
DPO_API dpo_status dpo_graph_to_dot(const dpo_graph* g, char** out);

/*
 * JSON reports. Each sets *json_out whenever it returns DPO_OK or
 * DPO_NEGATIVE (and, for dpo_intervals_report, DPO_INTERNAL_ERROR).
 */

/* Interval assignment of the phylogeny graph plus its verification summary.
 * DPO_INTERNAL_ERROR if the round trip or a separation check fails. */
DPO_API dpo_status dpo_intervals_report(const dpo_points* points, char** json_out);

/* DPO_OK with an assignment if interval, DPO_NEGATIVE otherwise. */
DPO_API dpo_status dpo_check_interval(const dpo_graph* g, char** json_out);

/* DPO_OK with a witness path if one exists, DPO_NEGATIVE otherwise. */
DPO_API dpo_status dpo_obstruct(const dpo_graph* g, char** json_out);

/* DPO_NEGATIVE if g is not an interval graph. *csv_out receives the
 * configuration of the extension. */
DPO_API dpo_status dpo_extend(const dpo_graph* g, char** json_out, char** csv_out);

/* Exhaustive grid search for a configuration realizing g exactly.
 * DPO_NEGATIVE if none; *csv_out is set only on DPO_OK. */
DPO_API dpo_status dpo_realize(const dpo_graph* g, size_t n_max, unsigned jobs, char** json_out, char** csv_out);

/* Least number of extra vertices (up to r_max) for an induced extension.
 * DPO_NEGATIVE if none within r_max; *csv_out is set only on DPO_OK. */
DPO_API dpo_status dpo_pdpo(const dpo_graph* g, size_t r_max, unsigned jobs, char** json_out, char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* DPOPHYLO_H */
