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

namespace dpophylo {

/// Same vertex set; uv is an edge iff u and v have a common prey.
Graph competition_graph(const Digraph& d);

/// Same vertex set; uv is an edge iff there is an arc between u and v in
/// either direction or u and v have a common prey.
Graph phylogeny_graph(const Digraph& d);

} // namespace dpophylo
