// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "intsimplex/harness.hpp"
#include "intsimplex/json_io.hpp"

using namespace intsimplex;
using namespace intsimplex::harness;

namespace {

const ClaimResult& find_claim(const std::vector<ClaimResult>& results, const std::string& claim) {
    for (const auto& r : results)
        if (r.claim == claim) return r;
    FAIL("claim not found: " << claim);
    throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("verify_containers passes exhaustively on small instances", "[harness]") {
    const auto results = verify_containers(GraphParams{2, 2});
    REQUIRE(results.size() == 2);
    for (const auto& r : results) {
        INFO(r.claim << ": " << r.observed << " (" << r.witness << ")");
        REQUIRE(r.passed());
        REQUIRE(r.verdict() == "pass");
    }
    REQUIRE(find_claim(results, "container/containers_valid").witness == "exhaustive:15 pairs");

    for (const auto& r : verify_containers(GraphParams{2, 3})) REQUIRE(r.passed());
    REQUIRE_THROWS_AS(verify_containers(GraphParams{1, 3}), std::invalid_argument);
}

TEST_CASE("verify_containers samples large instances deterministically", "[harness]") {
    const auto results = verify_containers(GraphParams{3, 4}, 200, 77);
    for (const auto& r : results) REQUIRE(r.passed());
    REQUIRE(find_claim(results, "container/containers_valid").witness == "sampled:200 pairs seed=77");

    const auto again = verify_containers(GraphParams{3, 4}, 200, 77);
    for (std::size_t i = 0; i < results.size(); ++i) {
        REQUIRE(results[i].observed == again[i].observed);
        REQUIRE(results[i].witness == again[i].witness);
    }
}

TEST_CASE("verify_connectivity_and_diameter over known instances", "[harness]") {
    for (const GraphParams p : {GraphParams{2, 2}, GraphParams{3, 3}, GraphParams{3, 1}}) {
        const auto results = verify_connectivity_and_diameter(p);
        REQUIRE(results.size() == 3);
        for (const auto& r : results) {
            INFO(r.claim << " on n=" << p.n << " m=" << p.m << ": expected " << r.expected
                         << " observed " << r.observed);
            REQUIRE(r.passed());
        }
    }
}

TEST_CASE("verify_bottleneck finds the forced vertex", "[harness]") {
    const ClaimResult r22 = verify_bottleneck(GraphParams{2, 2});
    REQUIRE(r22.passed());
    REQUIRE(r22.witness == "u=2,0,0 v=0,0,2 w=1,0,1");

    REQUIRE(verify_bottleneck(GraphParams{2, 3}).witness == "u=3,0,0 v=0,0,3 w=2,0,1");
    REQUIRE(verify_bottleneck(GraphParams{2, 3}).passed());
    REQUIRE(verify_bottleneck(GraphParams{3, 2}).witness == "u=2,0,0,0 v=0,0,0,2 w=1,0,0,1");
    REQUIRE(verify_bottleneck(GraphParams{3, 2}).passed());

    REQUIRE_THROWS_AS(verify_bottleneck(GraphParams{2, 1}), std::invalid_argument);
}

TEST_CASE("verify_omega_diameters confirms both diameters equal m+1", "[harness]") {
    const auto r22 = verify_omega_diameters(GraphParams{2, 2});
    REQUIRE(r22.size() == 2);
    for (const auto& r : r22) {
        REQUIRE(r.expected == "3");
        REQUIRE(r.passed());
        REQUIRE_FALSE(r.outside_hypothesis);
    }

    const auto r23 = verify_omega_diameters(GraphParams{3, 2});
    REQUIRE(r23.size() == 4);  // omega in {2, 3}, two quantities each
    for (const auto& r : r23) {
        REQUIRE(r.expected == "3");
        REQUIRE(r.passed());
    }

    for (const auto& r : verify_omega_diameters(GraphParams{3, 3})) {
        REQUIRE(r.expected == "4");
        REQUIRE(r.passed());
    }
}

TEST_CASE("verify_omega_diameters falls back to the sandwich under a tiny budget", "[harness]") {
    const auto results = verify_omega_diameters(GraphParams{2, 2}, 5);
    const auto& wide = find_claim(results, "wide_diameter/omega=2");
    REQUIRE(wide.passed());
    REQUIRE(wide.observed == "3");
    REQUIRE(wide.witness.find("sandwich") != std::string::npos);

    const auto& fault = find_claim(results, "fault_diameter/omega=2");
    REQUIRE(fault.witness.find("sandwich") == std::string::npos);
}

TEST_CASE("m = 1 instances are reported outside the hypothesis", "[harness]") {
    for (int n = 2; n <= 3; ++n) {
        const auto results = verify_omega_diameters(GraphParams{n, 1});
        REQUIRE_FALSE(results.empty());
        for (const auto& r : results) {
            REQUIRE(r.outside_hypothesis);
            REQUIRE(r.verdict() == "outside-hypothesis");
            REQUIRE(r.witness.find("outside the m>=2 hypothesis") != std::string::npos);
        }
        // the m+1 formula predicts 2; the complete graph actually has D_omega = 1
        const auto& fault = find_claim(results, "fault_diameter/omega=2");
        REQUIRE(fault.expected == "2");
        REQUIRE(fault.observed == "1");
    }
}

TEST_CASE("campaigns aggregate claims and stay deterministic", "[harness]") {
    CampaignConfig config;
    config.n_lo = config.n_hi = 2;
    config.m_lo = 1;
    config.m_hi = 2;
    const CampaignReport report = run_campaign(config);

    REQUIRE(report.all_passed());
    REQUIRE(report.failures() == 0);
    int outside = 0;
    for (const auto& r : report.results) outside += r.outside_hypothesis ? 1 : 0;
    REQUIRE(outside == 2);  // m=1 omega-diameter claims for omega=2

    const std::string jsonl = jsonio::campaign_jsonl(report);
    REQUIRE(jsonl == jsonio::campaign_jsonl(run_campaign(config)));

    const std::string table = format_table(report);
    REQUIRE(table.find("claim") != std::string::npos);
    REQUIRE(table.find("outside-hypothesis") != std::string::npos);
    REQUIRE(table.find("FAIL") == std::string::npos);
    REQUIRE(table.find("seed=" + std::to_string(config.seed)) != std::string::npos);
}

TEST_CASE("claim JSON lines carry the full record", "[harness]") {
    const auto results = verify_omega_diameters(GraphParams{2, 2});
    const auto j = jsonio::claim_json(results.front());
    REQUIRE(j.at("claim") == "fault_diameter/omega=2");
    REQUIRE(j.at("n") == 2);
    REQUIRE(j.at("m") == 2);
    REQUIRE(j.at("expected") == "3");
    REQUIRE(j.at("observed") == "3");
    REQUIRE(j.at("verdict") == "pass");
}
