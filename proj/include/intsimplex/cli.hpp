// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Command-line surface. Exit codes: 0 success, 1 usage or validation error,
// 2 failed verification claim, 3 search budget overrun.

#pragma once

#include <CLI11.hpp>
#include <iostream>

#include "intsimplex/embeddings.hpp"
#include "intsimplex/json_io.hpp"

namespace intsimplex::cli {

namespace detail {

inline FaultSet parse_faults(const std::vector<std::string>& specs, const GraphParams& params) {
    FaultSet faults;
    for (const std::string& spec : specs) {
        std::stringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ';'))
            if (!item.empty()) faults.insert(parse_vertex(item, params));
    }
    return faults;
}

// "n1..n2,m1..m2" (single values allowed on either side).
inline void parse_grid(const std::string& text, harness::CampaignConfig& config) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("grid: expected 'n1..n2,m1..m2', got '" + text + "'");
    auto parse_range = [&](const std::string& part, int& lo, int& hi) {
        const auto dots = part.find("..");
        try {
            if (dots == std::string::npos) {
                lo = hi = std::stoi(part);
            } else {
                lo = std::stoi(part.substr(0, dots));
                hi = std::stoi(part.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("grid: malformed range '" + part + "'");
        }
        if (lo > hi) throw std::invalid_argument("grid: empty range '" + part + "'");
    };
    parse_range(text.substr(0, comma), config.n_lo, config.n_hi);
    parse_range(text.substr(comma + 1), config.m_lo, config.m_hi);
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"integer simplex topology toolkit"};
    app.require_subcommand(1);

    GraphParams params;
    auto add_instance = [&](CLI::App* sub) {
        sub->add_option("-n,--dimension", params.n, "dimension n (vertices have n+1 coordinates)")
            ->required();
        sub->add_option("-m,--side", params.m, "side length m (coordinate sum)")->required();
    };

    int exit_code = 0;

    auto* gen = app.add_subcommand("gen", "list the vertices of T_m^n in lexicographic order");
    add_instance(gen);
    gen->callback([&] {
        for (const Vertex& v : enumerate_vertices(params)) out << to_string(v) << "\n";
    });

    std::string u_text, v_text;
    std::vector<std::string> fault_specs;
    auto* route = app.add_subcommand(
        "route", "disjoint path container between two vertices, or a fault-avoiding path");
    add_instance(route);
    route->add_option("u", u_text, "source vertex, e.g. 2,0,0")->required();
    route->add_option("v", v_text, "target vertex")->required();
    route->add_option("--faults", fault_specs, "faulty vertices (repeatable; ';'-separated lists)");
    route->callback([&] {
        const Vertex u = parse_vertex(u_text, params), v = parse_vertex(v_text, params);
        const FaultSet faults = detail::parse_faults(fault_specs, params);
        if (faults.empty())
            out << jsonio::container_json(routing::build_container(u, v)).dump(2) << "\n";
        else
            out << jsonio::route_json(routing::route_avoiding(u, v, faults), faults).dump(2) << "\n";
    });

    bool as_json = false;
    auto* dist = app.add_subcommand("dist", "shortest-path distance between two vertices");
    add_instance(dist);
    dist->add_option("u", u_text, "source vertex")->required();
    dist->add_option("v", v_text, "target vertex")->required();
    dist->add_option("--faults", fault_specs, "faulty vertices to remove first");
    dist->add_flag("--json", as_json, "emit a JSON report");
    dist->callback([&] {
        const Vertex u = parse_vertex(u_text, params), v = parse_vertex(v_text, params);
        const FaultSet faults = detail::parse_faults(fault_specs, params);
        const auto d = oracles::bfs_distance(params, u, v, faults);
        if (as_json)
            out << jsonio::report_json("distance", std::nullopt,
                                       oracles::DiameterReport{d, {u, v}, faults})
                       .dump(2)
                << "\n";
        else
            out << (d ? std::to_string(*d) : "unreachable") << "\n";
    });

    auto* diam = app.add_subcommand("diam", "exact diameter, optionally after deleting vertices");
    add_instance(diam);
    diam->add_option("--faults", fault_specs, "faulty vertices to remove first");
    diam->add_flag("--json", as_json, "emit a JSON report");
    diam->callback([&] {
        const auto report = oracles::exact_diameter(params, detail::parse_faults(fault_specs, params));
        if (as_json)
            out << jsonio::report_json("diameter", std::nullopt, report).dump(2) << "\n";
        else
            out << (report.disconnected() ? "disconnected" : std::to_string(*report.value)) << "\n";
    });

    int omega = 1;
    bool audit_all_sizes = false;
    auto* fault_diam = app.add_subcommand(
        "fault-diam", "exact fault diameter D_omega by fault-set enumeration");
    add_instance(fault_diam);
    fault_diam->add_option("--omega", omega, "width omega (enumerates |F| = omega-1)")->required();
    fault_diam->add_flag("--audit-all-sizes", audit_all_sizes, "enumerate every |F| < omega");
    fault_diam->add_flag("--json", as_json, "emit a JSON report");
    fault_diam->callback([&] {
        const auto report = oracles::exact_fault_diameter(params, omega, audit_all_sizes);
        if (as_json)
            out << jsonio::report_json("fault_diameter", omega, report).dump(2) << "\n";
        else
            out << (report.disconnected() ? "disconnected" : std::to_string(*report.value)) << "\n";
    });

    std::uint64_t budget = oracles::kDefaultWideBudget;
    auto* wide_diam = app.add_subcommand(
        "wide-diam", "exact wide diameter d_omega by bounded disjoint-path search");
    add_instance(wide_diam);
    wide_diam->add_option("--omega", omega, "width omega")->required();
    wide_diam->add_option("--budget", budget, "node-expansion budget for the search");
    wide_diam->add_flag("--json", as_json, "emit a JSON report");
    wide_diam->callback([&] {
        const auto report = oracles::wide_diameter_report(params, omega, budget);
        if (as_json)
            out << jsonio::report_json("wide_diameter", omega, report).dump(2) << "\n";
        else
            out << *report.value << "\n";
    });

    harness::CampaignConfig config;
    std::string grid_text, report_format = "table";
    auto* verify = app.add_subcommand("verify", "run the claim-verification campaign over a grid");
    verify->add_option("--grid", grid_text, "instance grid 'n1..n2,m1..m2' (default 2..3,1..4)");
    verify->add_option("--seed", config.seed, "seed for pair sampling on large instances");
    verify->add_option("--pair-budget", config.pair_budget, "max pairs checked per instance");
    verify->add_option("--wide-budget", config.wide_budget, "wide-diameter search budget");
    verify->add_option("--format", report_format, "report format")
        ->check(CLI::IsMember({"table", "jsonl"}));
    verify->callback([&] {
        if (!grid_text.empty()) detail::parse_grid(grid_text, config);
        const harness::CampaignReport report = harness::run_campaign(config);
        out << (report_format == "jsonl" ? jsonio::campaign_jsonl(report)
                                         : harness::format_table(report));
        if (!report.all_passed()) exit_code = 2;
    });

    std::string map_from, map_vertex;
    int map_side = 1;
    auto* map = app.add_subcommand("map", "map a mesh or tripy vertex into its integer simplex");
    map->add_option("--from", map_from, "source family")
        ->check(CLI::IsMember({"mesh", "tripy"}))
        ->required();
    map->add_option("vertex", map_vertex, "mesh vertex 'x,y' or tripy vertex 'k:x,y'")->required();
    map->add_option("-m,--side", map_side, "mesh side length / tripy levels")->required();
    map->callback([&] {
        if (map_from == "mesh")
            out << to_string(embeddings::sigma1(embeddings::parse_mesh_vertex(map_vertex, map_side),
                                                map_side))
                << "\n";
        else
            out << to_string(embeddings::sigma2(embeddings::parse_tripy_vertex(map_vertex, map_side),
                                                map_side))
                << "\n";
    });

    std::string export_format;
    auto* export_cmd = app.add_subcommand("export", "materialize the graph for external tools");
    add_instance(export_cmd);
    export_cmd->add_option("--format", export_format, "output format")
        ->check(CLI::IsMember({"dot", "edges", "json"}))
        ->required();
    export_cmd->callback([&] {
        if (export_format == "dot")
            out << graphio::to_dot(params);
        else if (export_format == "edges")
            out << graphio::to_edge_lines(params);
        else
            out << jsonio::graph_json(params).dump(2) << "\n";
    });

    std::vector<const char*> argv{"intsimplex"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const oracles::BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}  // namespace intsimplex::cli
