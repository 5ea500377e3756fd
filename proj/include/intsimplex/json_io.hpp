// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// JSON renderings of containers, oracle reports, claim results and graph
// dumps. Key order and path order are fixed so identical inputs produce
// byte-identical output.

#pragma once

#include <json.hpp>

#include "intsimplex/graph_export.hpp"
#include "intsimplex/harness.hpp"
#include "intsimplex/oracles.hpp"
#include "intsimplex/routing.hpp"

namespace intsimplex::jsonio {

using ordered_json = nlohmann::ordered_json;

inline ordered_json params_json(const GraphParams& params) {
    return ordered_json{{"n", params.n}, {"m", params.m}};
}

inline ordered_json path_json(const routing::Path& path) {
    ordered_json arr = ordered_json::array();
    for (const Vertex& v : path.vertices) arr.push_back(to_string(v));
    return arr;
}

inline ordered_json fault_json(const FaultSet& faults) {
    ordered_json arr = ordered_json::array();
    for (const Vertex& f : faults) arr.push_back(to_string(f));
    return arr;
}

// { "params": {...}, "u": "...", "v": "...", "paths": [[...], ...],
//   "lengths": [...] } with short paths in (up_rot, down_rot) order followed
// by detours in ascending k.
inline ordered_json container_json(const routing::Container& c) {
    ordered_json paths = ordered_json::array();
    ordered_json lengths = ordered_json::array();
    for (const routing::Path& p : c.all_paths()) {
        paths.push_back(path_json(p));
        lengths.push_back(p.length());
    }
    const GraphParams params{c.source.dimension(), c.source.side_sum()};
    return ordered_json{{"params", params_json(params)},
                        {"u", to_string(c.source)},
                        {"v", to_string(c.target)},
                        {"paths", paths},
                        {"lengths", lengths}};
}

inline ordered_json route_json(const routing::Path& path, const FaultSet& faults) {
    const GraphParams params{path.source().dimension(), path.source().side_sum()};
    return ordered_json{{"params", params_json(params)},
                        {"u", to_string(path.source())},
                        {"v", to_string(path.target())},
                        {"path", path_json(path)},
                        {"length", path.length()},
                        {"faults", fault_json(faults)}};
}

// { "quantity": "...", "omega": ..., "value": ..., "witness_pair": [...],
//   "witness_faults": [...] }; a disconnected result carries value null and
// "disconnected": true.
inline ordered_json report_json(const std::string& quantity, std::optional<int> omega,
                                const oracles::DiameterReport& report) {
    ordered_json j;
    j["quantity"] = quantity;
    if (omega) j["omega"] = *omega;
    if (report.disconnected()) {
        j["value"] = nullptr;
        j["disconnected"] = true;
    } else {
        j["value"] = *report.value;
    }
    j["witness_pair"] = ordered_json::array(
        {to_string(report.witness_pair.first), to_string(report.witness_pair.second)});
    j["witness_faults"] = fault_json(report.witness_faults);
    return j;
}

inline ordered_json claim_json(const harness::ClaimResult& r) {
    return ordered_json{{"claim", r.claim},     {"n", r.params.n},
                        {"m", r.params.m},      {"expected", r.expected},
                        {"observed", r.observed}, {"witness", r.witness},
                        {"verdict", r.verdict()}};
}

// One ClaimResult per line.
inline std::string campaign_jsonl(const harness::CampaignReport& report) {
    std::string out;
    for (const auto& r : report.results) out += claim_json(r).dump() + "\n";
    return out;
}

inline ordered_json graph_json(const GraphParams& params) {
    ordered_json vertices = ordered_json::array();
    for (const Vertex& v : enumerate_vertices(params)) vertices.push_back(to_string(v));
    ordered_json edges = ordered_json::array();
    for (const auto& [u, v] : graphio::edge_list(params))
        edges.push_back(ordered_json::array({to_string(u), to_string(v)}));
    return ordered_json{{"params", params_json(params)}, {"vertices", vertices}, {"edges", edges}};
}

}  // namespace intsimplex::jsonio
