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

#include "dpophylo/reports.hpp"

#include "dpophylo/derive.hpp"

#include <map>

namespace dpophylo {

Json to_json(const IntervalAssignment& assignment)
{
    Json out = Json::object();
    for (const auto& [v, j] : assignment)
        out[v] = Json{{"lo", format_rational(j.lo())}, {"hi", format_rational(j.hi())}};
    return out;
}

IntervalAssignment interval_assignment_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("interval assignment must be a JSON object");
    IntervalAssignment out;
    for (const auto& [v, iv] : j.items()) {
        if (!is_valid_label(v))
            throw InputError("invalid vertex label '" + v + "'");
        if (!iv.is_object() || !iv.contains("lo") || !iv.contains("hi") || !iv["lo"].is_string() ||
            !iv["hi"].is_string())
            throw InputError("interval for '" + v + "' must be {\"lo\": \"p/q\", \"hi\": \"p/q\"}");
        out.emplace(v, Interval(parse_rational(iv["lo"].get<std::string>()), parse_rational(iv["hi"].get<std::string>())));
    }
    return out;
}

Json to_json(const Embedding& embedding)
{
    Json out = Json::object();
    for (const auto& [from, to] : embedding)
        out[from] = to;
    return out;
}

Json to_json(const SeparationReport& report)
{
    std::map<std::string, std::size_t> panels{
        {to_string(SeparationPanel::Strict), 0},
        {to_string(SeparationPanel::FirstTie), 0},
        {to_string(SeparationPanel::SecondTie), 0},
    };
    std::map<std::string, std::size_t> cases{
        {to_string(SeparationCase::LowerAboveMeet), 0},
        {to_string(SeparationCase::UpperBelowMeet), 0},
        {to_string(SeparationCase::UpperAtMeet), 0},
        {to_string(SeparationCase::LowerAtMeet), 0},
    };
    for (const auto& check : report.checked) {
        ++panels[to_string(check.panel)];
        for (auto c : check.cases)
            ++cases[to_string(c)];
    }

    Json out;
    out["pairs_checked"] = report.checked.size();
    out["panels"] = panels;
    out["cases"] = cases;
    if (report.violation)
        out["violation"] = Json{{"first", report.violation->first},
                                {"second", report.violation->second},
                                {"reason", report.violation->reason}};
    else
        out["violation"] = nullptr;
    return out;
}

IntervalsOutcome intervals_outcome(const PointConfig& config)
{
    const Digraph d = build_dpo(config);
    const auto assignment = phylogeny_intervals(d, config);
    const bool round_trip = intersection_graph(assignment) == phylogeny_graph(d);
    const auto separation = verify_separation(d, config, assignment);

    IntervalsOutcome out;
    out.verified = round_trip && separation.ok();
    out.json["assignment"] = to_json(assignment);
    out.json["verification"] = Json{{"round_trip", round_trip}, {"separation", to_json(separation)}};
    return out;
}

} // namespace dpophylo
