// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "intsimplex/oracles.hpp"
#include "intsimplex/routing.hpp"
#include "test_util.hpp"

using namespace intsimplex;
using namespace intsimplex::oracles;
using test_util::vtx;

TEST_CASE("bfs_distance matches the h metric and handles faults", "[oracles]") {
    const GraphParams p22{2, 2};
    const Vertex u = vtx({2, 0, 0}, p22), v = vtx({0, 0, 2}, p22);
    REQUIRE(bfs_distance(p22, u, v) == 2);
    REQUIRE(bfs_distance(p22, u, v, {vtx({1, 0, 1}, p22)}) == 3);
    REQUIRE(bfs_distance(p22, u, u) == 0);

    REQUIRE_THROWS_AS(bfs_distance(p22, u, v, {u}), std::invalid_argument);
    REQUIRE_THROWS_AS(bfs_distance(p22, u, v, {v}), std::invalid_argument);

    for (int n = 2; n <= 4; ++n)
        for (int m = 1; m <= 3; ++m) {
            const GraphParams p{n, m};
            const auto verts = enumerate_vertices(p);
            for (const Vertex& a : verts) {
                const auto dist = single_source_distances(p, a);
                for (const Vertex& b : verts) REQUIRE(dist.at(b) == h_distance(a, b));
            }
        }
}

TEST_CASE("bfs_distance reports disconnection, not an error", "[oracles]") {
    // T_2^1 is the path (2,0)-(1,1)-(0,2); cutting the middle disconnects it
    const GraphParams p{1, 2};
    const auto d = bfs_distance(p, vtx({2, 0}, p), vtx({0, 2}, p), {vtx({1, 1}, p)});
    REQUIRE_FALSE(d.has_value());
}

TEST_CASE("exact_diameter over instances and fault sets", "[oracles]") {
    REQUIRE(exact_diameter(GraphParams{2, 3}).value == 3);
    REQUIRE(exact_diameter(GraphParams{3, 1}).value == 1);  // K_4

    const GraphParams p22{2, 2};
    const auto faulted = exact_diameter(p22, {vtx({1, 0, 1}, p22)});
    REQUIRE(faulted.value == 3);
    // witness reproduces the value through the distance oracle
    REQUIRE(bfs_distance(p22, faulted.witness_pair.first, faulted.witness_pair.second,
                         faulted.witness_faults) == faulted.value);

    const GraphParams p12{1, 2};
    const auto split = exact_diameter(p12, {vtx({1, 1}, p12)});
    REQUIRE(split.disconnected());

    REQUIRE_THROWS_AS(exact_diameter(p12, {vtx({1, 1}, p12), vtx({2, 0}, p12)}),
                      std::invalid_argument);  // one survivor
}

TEST_CASE("max_disjoint_paths agrees with known connectivity", "[oracles]") {
    const GraphParams p22{2, 2};
    REQUIRE(max_disjoint_paths(p22, vtx({2, 0, 0}, p22), vtx({0, 0, 2}, p22)) == 2);

    const GraphParams p13{3, 1};
    REQUIRE(max_disjoint_paths(p13, vtx({1, 0, 0, 0}, p13), vtx({0, 0, 0, 1}, p13)) == 3);

    const GraphParams p33{3, 3};
    REQUIRE(max_disjoint_paths(p33, vtx({3, 0, 0, 0}, p33), vtx({0, 0, 0, 3}, p33)) == 3);

    REQUIRE_THROWS_AS(max_disjoint_paths(p22, vtx({2, 0, 0}, p22), vtx({2, 0, 0}, p22)),
                      std::invalid_argument);
}

TEST_CASE("the flow oracle never contradicts the container", "[oracles]") {
    for (const GraphParams p : {GraphParams{2, 3}, GraphParams{3, 2}}) {
        const auto verts = enumerate_vertices(p);
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                const auto c = routing::build_container(verts[i], verts[j]);
                REQUIRE(max_disjoint_paths(p, verts[i], verts[j]) >= static_cast<int>(c.size()));
            }
    }
}

TEST_CASE("vertex_connectivity equals n", "[oracles]") {
    REQUIRE(vertex_connectivity(GraphParams{2, 2}) == 2);
    REQUIRE(vertex_connectivity(GraphParams{2, 4}) == 2);
    REQUIRE(vertex_connectivity(GraphParams{3, 2}) == 3);
    REQUIRE(vertex_connectivity(GraphParams{3, 1}) == 3);  // complete-graph fallback
    REQUIRE(vertex_connectivity(GraphParams{1, 3}) == 1);
}

TEST_CASE("exact_fault_diameter by fault-set enumeration", "[oracles]") {
    REQUIRE(exact_fault_diameter(GraphParams{2, 2}, 2).value == 3);
    REQUIRE(exact_fault_diameter(GraphParams{3, 2}, 3).value == 3);

    for (const GraphParams p : {GraphParams{2, 2}, GraphParams{2, 3}, GraphParams{3, 2}})
        REQUIRE(exact_fault_diameter(p, 1).value == p.m);  // omega = 1 is the plain diameter

    SECTION("the audit mode that sweeps all smaller sizes agrees") {
        for (const GraphParams p : {GraphParams{2, 2}, GraphParams{3, 2}}) {
            const auto fast = exact_fault_diameter(p, 2, false);
            const auto audit = exact_fault_diameter(p, 2, true);
            REQUIRE(fast.value == audit.value);
        }
        const auto three_fast = exact_fault_diameter(GraphParams{3, 2}, 3, false);
        const auto three_audit = exact_fault_diameter(GraphParams{3, 2}, 3, true);
        REQUIRE(three_fast.value == three_audit.value);
    }

    SECTION("witness reproduces the value") {
        const auto r = exact_fault_diameter(GraphParams{2, 3}, 2);
        REQUIRE(bfs_distance(GraphParams{2, 3}, r.witness_pair.first, r.witness_pair.second,
                             r.witness_faults) == r.value);
    }

    SECTION("disconnection surfaces as the marker") {
        REQUIRE(exact_fault_diameter(GraphParams{1, 2}, 2).disconnected());  // path graph, one cut
        // even when omega-1 faults would leave fewer than 2 survivors, the
        // smaller-size sweep still finds the disconnecting set
        REQUIRE(exact_fault_diameter(GraphParams{1, 2}, 3).disconnected());
    }
}

TEST_CASE("disjoint_paths_within is an exact bounded search", "[oracles]") {
    const GraphParams p22{2, 2};
    const Vertex u = vtx({2, 0, 0}, p22), v = vtx({0, 0, 2}, p22);
    REQUIRE(disjoint_paths_within(p22, u, v, 2, 3));
    REQUIRE_FALSE(disjoint_paths_within(p22, u, v, 2, 2));
    REQUIRE(disjoint_paths_within(p22, vtx({2, 0, 0}, p22), vtx({1, 1, 0}, p22), 1, 1));
    REQUIRE_FALSE(disjoint_paths_within(p22, u, v, 3, 30));  // only 2-connected

    SECTION("budget overruns are loud") {
        SearchBudget tiny{3};
        REQUIRE_THROWS_AS(disjoint_paths_within(GraphParams{3, 3}, vtx({3, 0, 0, 0}, GraphParams{3, 3}),
                                                vtx({0, 0, 0, 3}, GraphParams{3, 3}), 3, 4, tiny),
                          BudgetExceeded);
    }
}

TEST_CASE("exact_wide_diameter by bounded search", "[oracles]") {
    REQUIRE(exact_wide_diameter(GraphParams{2, 2}, 2) == 3);
    REQUIRE(exact_wide_diameter(GraphParams{2, 3}, 1) == 3);  // omega=1 collapses to the diameter
    REQUIRE(exact_wide_diameter(GraphParams{3, 2}, 2) == 3);
    REQUIRE(exact_wide_diameter(GraphParams{3, 2}, 3) == 3);

    SECTION("witness pair attains the maximum") {
        const auto r = wide_diameter_report(GraphParams{2, 2}, 2);
        REQUIRE(r.value == 3);
        REQUIRE(disjoint_paths_within(GraphParams{2, 2}, r.witness_pair.first, r.witness_pair.second,
                                      2, *r.value));
        REQUIRE_FALSE(disjoint_paths_within(GraphParams{2, 2}, r.witness_pair.first,
                                            r.witness_pair.second, 2, *r.value - 1));
    }

    SECTION("asking beyond the connectivity fails loudly") {
        REQUIRE_THROWS_AS(exact_wide_diameter(GraphParams{2, 2}, 5), std::domain_error);
    }

    SECTION("budget propagates") {
        REQUIRE_THROWS_AS(exact_wide_diameter(GraphParams{3, 3}, 3, 50), BudgetExceeded);
    }
}

TEST_CASE("all_shortest_paths_through detects forced vertices", "[oracles]") {
    const GraphParams p22{2, 2};
    const Vertex u = vtx({2, 0, 0}, p22), v = vtx({0, 0, 2}, p22);
    REQUIRE(all_shortest_paths_through(p22, u, v, vtx({1, 0, 1}, p22)));
    REQUIRE_FALSE(all_shortest_paths_through(p22, u, v, vtx({1, 1, 0}, p22)));

    const GraphParams p32{2, 3};
    REQUIRE(all_shortest_paths_through(p32, vtx({3, 0, 0}, p32), vtx({0, 0, 3}, p32),
                                       vtx({2, 0, 1}, p32)));

    SECTION("agrees with the vertex-deletion route") {
        const GraphParams p{2, 3};
        const auto verts = enumerate_vertices(p);
        for (const Vertex& a : verts)
            for (const Vertex& b : verts) {
                if (a == b) continue;
                for (const Vertex& w : verts) {
                    if (w == a || w == b) continue;
                    const bool counted = all_shortest_paths_through(p, a, b, w);
                    const auto without = bfs_distance(p, a, b, {w});
                    const bool by_deletion = !without.has_value() || *without > h_distance(a, b);
                    REQUIRE(counted == by_deletion);
                }
            }
    }
}
