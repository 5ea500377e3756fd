// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Verification campaigns: every structural claim the library makes about
// T_m^n is checked against the brute-force oracles over a grid of
// instances, with witnesses recorded for whatever is observed.

#pragma once

#include <random>

#include "intsimplex/oracles.hpp"
#include "intsimplex/routing.hpp"

namespace intsimplex::harness {

struct ClaimResult {
    std::string claim;
    GraphParams params;
    std::string expected;
    std::string observed;
    std::string witness;
    bool outside_hypothesis = false;

    bool passed() const { return expected == observed; }
    std::string verdict() const {
        if (outside_hypothesis) return "outside-hypothesis";
        return passed() ? "pass" : "FAIL";
    }
};

namespace detail {

inline std::string pair_label(const Vertex& u, const Vertex& v) {
    return "u=" + to_string(u) + " v=" + to_string(v);
}

// All pairs when they fit the budget, otherwise a seeded uniform sample.
inline std::vector<std::pair<Vertex, Vertex>> select_pairs(const std::vector<Vertex>& verts,
                                                           int pair_budget, std::uint64_t seed,
                                                           std::string& mode_note) {
    const std::uint64_t all = static_cast<std::uint64_t>(verts.size()) * (verts.size() - 1) / 2;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    if (all <= static_cast<std::uint64_t>(pair_budget)) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) pairs.emplace_back(verts[i], verts[j]);
        mode_note = "exhaustive:" + std::to_string(all) + " pairs";
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::size_t> pick(0, verts.size() - 1);
        while (pairs.size() < static_cast<std::size_t>(pair_budget)) {
            const std::size_t i = pick(rng), j = pick(rng);
            if (i != j) pairs.emplace_back(verts[i], verts[j]);
        }
        mode_note = "sampled:" + std::to_string(pair_budget) + " pairs seed=" + std::to_string(seed);
    }
    return pairs;
}

}  // namespace detail

// Container construction holds on every checked pair: validity, counts,
// lengths, internal disjointness, and width >= n.
inline std::vector<ClaimResult> verify_containers(const GraphParams& params, int pair_budget = 500,
                                              std::uint64_t seed = 20260810) {
    params.validate();
    if (params.n < 2) throw std::invalid_argument("verify_containers: requires n >= 2");

    std::string mode;
    const auto pairs = detail::select_pairs(enumerate_vertices(params), pair_budget, seed, mode);

    int defects = 0, width_violations = 0;
    std::string first_defect, first_width;
    for (const auto& [u, v] : pairs) {
        const routing::Container c = routing::build_container(u, v);
        if (const auto defect = routing::container_defect(c); defect && ++defects == 1)
            first_defect = detail::pair_label(u, v) + ": " + *defect;
        if (static_cast<int>(c.size()) < params.n && ++width_violations == 1)
            first_width = detail::pair_label(u, v) + ": width " + std::to_string(c.size());
    }

    std::vector<ClaimResult> out;
    out.push_back({"container/containers_valid", params, "0 defects",
                   std::to_string(defects) + " defects",
                   defects ? first_defect : mode, false});
    out.push_back({"container/width_at_least_n", params, "0 violations",
                   std::to_string(width_violations) + " violations",
                   width_violations ? first_width : mode, false});
    return out;
}

// Flow-oracle connectivity equals n, oracle diameter equals m, and BFS
// distance equals the h-metric on every pair.
inline std::vector<ClaimResult> verify_connectivity_and_diameter(const GraphParams& params) {
    params.validate();
    if (params.n < 2) throw std::invalid_argument("verify_connectivity_and_diameter: requires n >= 2");
    std::vector<ClaimResult> out;

    const int kappa = oracles::vertex_connectivity(params);
    out.push_back({"connectivity/equals_n", params, std::to_string(params.n),
                   std::to_string(kappa), "flow oracle over vertex-split network", false});

    const oracles::DiameterReport diam = oracles::exact_diameter(params);
    out.push_back({"diameter/equals_m", params, std::to_string(params.m),
                   diam.disconnected() ? "disconnected" : std::to_string(*diam.value),
                   detail::pair_label(diam.witness_pair.first, diam.witness_pair.second), false});

    const std::vector<Vertex> verts = enumerate_vertices(params);
    int mismatches = 0;
    std::string first;
    for (const Vertex& u : verts) {
        const auto dist = oracles::single_source_distances(params, u);
        for (const Vertex& v : verts) {
            const auto it = dist.find(v);
            const bool bad = it == dist.end() || it->second != h_distance(u, v);
            if (bad && ++mismatches == 1)
                first = detail::pair_label(u, v) + ": bfs=" +
                        (it == dist.end() ? "unreachable" : std::to_string(it->second)) +
                        " h=" + std::to_string(h_distance(u, v));
        }
    }
    out.push_back({"distance/bfs_equals_h", params, "0 mismatches",
                   std::to_string(mismatches) + " mismatches",
                   mismatches ? first : std::to_string(verts.size() * verts.size()) + " ordered pairs",
                   false});
    return out;
}

// Every shortest path between the opposite corners m0^n and 0^n m passes
// through (m-1)0^(n-1)1.
inline ClaimResult verify_bottleneck(const GraphParams& params) {
    params.validate();
    if (params.n < 2 || params.m < 2)
        throw std::invalid_argument("verify_bottleneck: requires n >= 2 and m >= 2");

    std::vector<int> cu(params.n + 1, 0), cv(params.n + 1, 0), cw(params.n + 1, 0);
    cu.front() = params.m;
    cv.back() = params.m;
    cw.front() = params.m - 1;
    cw.back() = 1;
    const Vertex u = make_vertex(cu, params), v = make_vertex(cv, params), w = make_vertex(cw, params);

    const bool forced = oracles::all_shortest_paths_through(params, u, v, w);
    return {"bottleneck/forced_vertex", params, "true", forced ? "true" : "false",
            detail::pair_label(u, v) + " w=" + to_string(w), false};
}

namespace detail {

// Constructive upper bound on the wide diameter: the worst max-length of a
// validated width-omega container selection over all pairs. Containers that
// fail validation abort the bound.
inline int validated_container_bound(const GraphParams& params, int omega) {
    int bound = 0;
    const std::vector<Vertex> verts = enumerate_vertices(params);
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const routing::Container c = routing::build_container(verts[i], verts[j]);
            if (const auto defect = routing::container_defect(c))
                throw std::logic_error("validated_container_bound: " + pair_label(verts[i], verts[j]) +
                                       ": " + *defect);
            for (const routing::Path& p : routing::select_width(c, omega))
                bound = std::max(bound, p.length());
        }
    return bound;
}

}  // namespace detail

// Fault diameter and wide diameter both equal m+1 for every width in 2..n.
// Exhaustive fault-set enumeration settles the fault diameter; the wide
// diameter uses the bounded exhaustive search and, if that overruns its
// budget, the sandwich of the oracle lower bound D_omega <= d_omega with the
// validated constructive upper bound.
//
// m = 1 instances are complete graphs; the claim set is still emitted but
// labelled outside-hypothesis instead of being scored.
inline std::vector<ClaimResult> verify_omega_diameters(
    const GraphParams& params, std::uint64_t wide_budget = oracles::kDefaultWideBudget) {
    params.validate();
    if (params.n < 2) throw std::invalid_argument("verify_omega_diameters: requires n >= 2");
    const bool outside = params.m < 2;
    const std::string note =
        outside ? " [m=1: complete graph K_" + std::to_string(params.n + 1) + ", outside the m>=2 hypothesis]"
                : "";

    std::vector<ClaimResult> out;
    for (int omega = 2; omega <= params.n; ++omega) {
        const std::string suffix = "/omega=" + std::to_string(omega);
        const std::string expected = std::to_string(params.m + 1);

        const oracles::DiameterReport fd = oracles::exact_fault_diameter(params, omega);
        std::string fd_witness = detail::pair_label(fd.witness_pair.first, fd.witness_pair.second);
        if (!fd.witness_faults.empty()) {
            fd_witness += " faults={";
            bool sep = false;
            for (const Vertex& f : fd.witness_faults) {
                if (sep) fd_witness += "; ";
                fd_witness += to_string(f);
                sep = true;
            }
            fd_witness += "}";
        }
        out.push_back({"fault_diameter" + suffix, params, expected,
                       fd.disconnected() ? "disconnected" : std::to_string(*fd.value),
                       fd_witness + note, outside});

        std::string wd_observed, wd_witness;
        try {
            const oracles::DiameterReport wd = oracles::wide_diameter_report(params, omega, wide_budget);
            wd_observed = std::to_string(*wd.value);
            wd_witness = "method=exhaustive " +
                         detail::pair_label(wd.witness_pair.first, wd.witness_pair.second);
        } catch (const oracles::BudgetExceeded& e) {
            const int upper = detail::validated_container_bound(params, omega);
            if (!fd.disconnected() && *fd.value == upper) {
                wd_observed = std::to_string(upper);
                wd_witness = "method=sandwich lower=D_omega=" + std::to_string(*fd.value) +
                             " upper=validated-container=" + std::to_string(upper) + " (" + e.what() + ")";
            } else {
                wd_observed = "unresolved";
                wd_witness = std::string("budget exceeded and bounds disagree: lower=") +
                             (fd.disconnected() ? "disconnected" : std::to_string(*fd.value)) +
                             " upper=" + std::to_string(upper);
            }
        }
        out.push_back({"wide_diameter" + suffix, params, expected, wd_observed,
                       wd_witness + note, outside});
    }
    return out;
}

struct CampaignConfig {
    int n_lo = 2, n_hi = 3;
    int m_lo = 1, m_hi = 4;
    int pair_budget = 500;
    std::uint64_t seed = 20260810;
    std::uint64_t wide_budget = oracles::kDefaultWideBudget;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<ClaimResult> results;

    int failures() const {
        int k = 0;
        for (const auto& r : results)
            if (!r.outside_hypothesis && !r.passed()) ++k;
        return k;
    }
    bool all_passed() const { return failures() == 0; }
};

// Runs every claim over the configured grid, deterministically.
inline CampaignReport run_campaign(const CampaignConfig& config) {
    CampaignReport report{config, {}};
    auto absorb = [&](std::vector<ClaimResult> rs) {
        for (auto& r : rs) report.results.push_back(std::move(r));
    };
    for (int n = config.n_lo; n <= config.n_hi; ++n)
        for (int m = config.m_lo; m <= config.m_hi; ++m) {
            const GraphParams params{n, m};
            absorb(verify_connectivity_and_diameter(params));
            absorb(verify_containers(params, config.pair_budget, config.seed));
            if (m >= 2) report.results.push_back(verify_bottleneck(params));
            absorb(verify_omega_diameters(params, config.wide_budget));
        }
    return report;
}

inline std::string format_table(const CampaignReport& report) {
    std::size_t claim_w = 5, exp_w = 8, obs_w = 8;
    for (const auto& r : report.results) {
        claim_w = std::max(claim_w, r.claim.size());
        exp_w = std::max(exp_w, r.expected.size());
        obs_w = std::max(obs_w, r.observed.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::string out = pad("claim", claim_w) + "  n  m  " + pad("expected", exp_w) + "  " +
                      pad("observed", obs_w) + "  verdict             witness\n";
    for (const auto& r : report.results)
        out += pad(r.claim, claim_w) + "  " + std::to_string(r.params.n) + "  " +
               std::to_string(r.params.m) + "  " + pad(r.expected, exp_w) + "  " +
               pad(r.observed, obs_w) + "  " + pad(r.verdict(), 18) + "  " + r.witness + "\n";

    int outside = 0;
    for (const auto& r : report.results) outside += r.outside_hypothesis ? 1 : 0;
    out += "\n" + std::to_string(report.results.size()) + " claims, " +
           std::to_string(report.results.size() - report.failures() - outside) + " passed, " +
           std::to_string(report.failures()) + " failed, " + std::to_string(outside) +
           " outside-hypothesis (seed=" + std::to_string(report.config.seed) + ")\n";
    return out;
}

}  // namespace intsimplex::harness
