// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// On-demand materialization of an instance for external consumers. Core
// routing never touches these; they exist for DOT/edge-list/JSON export.

#pragma once

#include "intsimplex/core.hpp"

namespace intsimplex::graphio {

// Undirected edges, each once, smaller endpoint first, in vertex order.
inline std::vector<std::pair<Vertex, Vertex>> edge_list(const GraphParams& params) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Vertex& u : enumerate_vertices(params))
        for (const Vertex& v : neighbors(u))
            if (u < v) edges.emplace_back(u, v);
    return edges;
}

// graph T { "2,0,0" -- "1,1,0"; ... }
inline std::string to_dot(const GraphParams& params) {
    std::string out = "graph T {\n";
    for (const auto& [u, v] : edge_list(params))
        out += "  \"" + to_string(u) + "\" -- \"" + to_string(v) + "\";\n";
    out += "}\n";
    return out;
}

// One edge per line: "u v".
inline std::string to_edge_lines(const GraphParams& params) {
    std::string out;
    for (const auto& [u, v] : edge_list(params)) out += to_string(u) + " " + to_string(v) + "\n";
    return out;
}

}  // namespace intsimplex::graphio
