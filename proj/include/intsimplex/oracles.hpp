// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force ground truth for T_m^n, independent of the container
// construction: BFS distances, exact diameters, flow-based connectivity,
// fault-diameter by fault-set enumeration and wide diameter by exhaustive
// length-bounded disjoint-path search. Desk-scale instances only; the
// exhaustive searches carry explicit expansion budgets and fail loudly.

#pragma once

#include <deque>
#include <optional>
#include <unordered_map>

#include "intsimplex/core.hpp"

namespace intsimplex::oracles {

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(std::uint64_t limit)
        : std::runtime_error("search budget of " + std::to_string(limit) + " node expansions exceeded"),
          limit(limit) {}
    std::uint64_t limit;
};

struct SearchBudget {
    std::uint64_t limit;
    std::uint64_t used = 0;

    void charge(std::uint64_t k = 1) {
        used += k;
        if (used > limit) throw BudgetExceeded(limit);
    }
};

constexpr std::uint64_t kDefaultWideBudget = 10'000'000;

struct DiameterReport {
    std::optional<int> value;  // nullopt: some surviving pair is disconnected
    std::pair<Vertex, Vertex> witness_pair;
    FaultSet witness_faults;

    bool disconnected() const { return !value.has_value(); }
};

namespace detail {

inline void validate_faults(const GraphParams& params, const FaultSet& faults) {
    for (const Vertex& f : faults) make_vertex(f.coords(), params);
}

// Indexed adjacency snapshot; only the oracles materialize the graph.
struct Materialized {
    std::vector<Vertex> verts;
    std::unordered_map<Vertex, int> index;
    std::vector<std::vector<int>> adj;

    explicit Materialized(const GraphParams& params) {
        verts = enumerate_vertices(params);
        index.reserve(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        adj.resize(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (const Vertex& w : neighbors(verts[i])) adj[i].push_back(index.at(w));
    }
};

inline std::vector<int> bfs_levels(const Materialized& g, int src, const std::vector<char>& blocked,
                                   SearchBudget* budget = nullptr) {
    std::vector<int> dist(g.verts.size(), -1);
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (budget) budget->charge();
        for (int y : g.adj[x]) {
            if (blocked[y] || dist[y] >= 0) continue;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

}  // namespace detail

// BFS over implicit adjacency from one source; fault vertices are skipped.
// Unreached vertices are absent from the result.
inline std::unordered_map<Vertex, int> single_source_distances(const GraphParams& params,
                                                               const Vertex& src,
                                                               const FaultSet& faults = {}) {
    params.validate();
    make_vertex(src.coords(), params);
    detail::validate_faults(params, faults);
    if (faults.count(src)) throw std::invalid_argument("single_source_distances: source is faulty");

    std::unordered_map<Vertex, int> dist;
    dist[src] = 0;
    std::deque<Vertex> queue{src};
    while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (const Vertex& y : neighbors(x)) {
            if (faults.count(y) || dist.count(y)) continue;
            dist[y] = dist[x] + 1;
            queue.push_back(y);
        }
    }
    return dist;
}

// Exact shortest-path length in T_m^n - faults.
inline std::optional<int> bfs_distance(const GraphParams& params, const Vertex& u, const Vertex& v,
                                       const FaultSet& faults = {}) {
    make_vertex(v.coords(), params);
    if (faults.count(v)) throw std::invalid_argument("bfs_distance: endpoint is in the fault set");
    const auto dist = single_source_distances(params, u, faults);
    const auto it = dist.find(v);
    if (it == dist.end()) return std::nullopt;
    return it->second;
}

// Max over all surviving pairs of bfs_distance; the witness is the first
// pair (in vertex order) attaining it.
inline DiameterReport exact_diameter(const GraphParams& params, const FaultSet& faults = {}) {
    params.validate();
    detail::validate_faults(params, faults);
    std::vector<Vertex> survivors;
    for (const Vertex& v : enumerate_vertices(params))
        if (!faults.count(v)) survivors.push_back(v);
    if (survivors.size() < 2)
        throw std::invalid_argument("exact_diameter: fewer than 2 surviving vertices");

    DiameterReport report{0, {survivors[0], survivors[0]}, faults};
    for (std::size_t i = 0; i < survivors.size(); ++i) {
        const auto dist = single_source_distances(params, survivors[i], faults);
        for (std::size_t j = i + 1; j < survivors.size(); ++j) {
            auto it = dist.find(survivors[j]);
            if (it == dist.end())
                return DiameterReport{std::nullopt, {survivors[i], survivors[j]}, faults};
            if (it->second > *report.value) {
                report.value = it->second;
                report.witness_pair = {survivors[i], survivors[j]};
            }
        }
    }
    return report;
}

// Maximum number of internally vertex-disjoint uv-paths: unit-capacity max
// flow on the vertex-split digraph (in/out node per vertex, capacity 1 on
// every non-terminal split arc).
inline int max_disjoint_paths(const GraphParams& params, const Vertex& u, const Vertex& v) {
    params.validate();
    if (u == v) throw std::invalid_argument("max_disjoint_paths: identical endpoints");
    make_vertex(u.coords(), params);
    make_vertex(v.coords(), params);

    const detail::Materialized g(params);
    const int nv = static_cast<int>(g.verts.size());
    // node 2i = in(i), 2i+1 = out(i); arcs stored with residual capacities
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs(2 * nv);
    auto add_arc = [&](int a, int b, int cap) {
        arcs[a].push_back({b, static_cast<int>(arcs[b].size()), cap});
        arcs[b].push_back({a, static_cast<int>(arcs[a].size()) - 1, 0});
    };
    const int iu = g.index.at(u), iv = g.index.at(v);
    for (int i = 0; i < nv; ++i) add_arc(2 * i, 2 * i + 1, (i == iu || i == iv) ? nv : 1);
    for (int i = 0; i < nv; ++i)
        for (int j : g.adj[i]) add_arc(2 * i + 1, 2 * j, 1);

    const int source = 2 * iu + 1, sink = 2 * iv;
    int flow = 0;
    while (true) {
        std::vector<std::pair<int, int>> parent(2 * nv, {-1, -1});  // node, arc index
        parent[source] = {source, -1};
        std::deque<int> queue{source};
        while (!queue.empty() && parent[sink].first < 0) {
            int x = queue.front();
            queue.pop_front();
            for (std::size_t a = 0; a < arcs[x].size(); ++a) {
                const Arc& arc = arcs[x][a];
                if (arc.cap > 0 && parent[arc.to].first < 0) {
                    parent[arc.to] = {x, static_cast<int>(a)};
                    queue.push_back(arc.to);
                }
            }
        }
        if (parent[sink].first < 0) break;
        for (int x = sink; x != source;) {
            auto [px, pa] = parent[x];
            Arc& arc = arcs[px][pa];
            arc.cap -= 1;
            arcs[x][arc.rev].cap += 1;
            x = px;
        }
        ++flow;
    }
    return flow;
}

// Menger reduction: minimum over non-adjacent pairs of max_disjoint_paths,
// falling back to all pairs when the graph is complete.
inline int vertex_connectivity(const GraphParams& params) {
    params.validate();
    const std::vector<Vertex> verts = enumerate_vertices(params);
    if (verts.size() < 2) throw std::invalid_argument("vertex_connectivity: trivial graph");

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!is_adjacent(verts[i], verts[j])) pairs.emplace_back(i, j);
    if (pairs.empty())  // complete graph
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) pairs.emplace_back(i, j);

    int best = -1;
    for (auto [i, j] : pairs) {
        const int k = max_disjoint_paths(params, verts[i], verts[j]);
        if (best < 0 || k < best) best = k;
    }
    return best;
}

// Max of exact_diameter over fault sets of size omega-1: any smaller set
// extends to a size-(omega-1) set avoiding its witness pair, which can only
// stretch the witness distance, so smaller sizes are redundant whenever the
// instance has at least omega+1 vertices. Below that (or with
// audit_all_sizes) every |F| < omega is enumerated.
inline DiameterReport exact_fault_diameter(const GraphParams& params, int omega,
                                           bool audit_all_sizes = false) {
    params.validate();
    if (omega < 1) throw std::invalid_argument("exact_fault_diameter: omega must be >= 1");
    const std::vector<Vertex> verts = enumerate_vertices(params);
    if (verts.size() < static_cast<std::size_t>(omega) + 1) audit_all_sizes = true;

    DiameterReport best{0, {verts[0], verts[0]}, {}};
    bool have_result = false;
    const int size_lo = audit_all_sizes ? 0 : omega - 1;
    for (int size = size_lo; size <= omega - 1; ++size) {
        if (size > static_cast<int>(verts.size()) - 2) continue;  // < 2 survivors, d is trivially 0
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            FaultSet faults;
            for (int i : pick) faults.insert(verts[i]);
            const DiameterReport r = exact_diameter(params, faults);
            if (r.disconnected()) return r;
            if (!have_result || *r.value > *best.value) {
                best = r;
                have_result = true;
            }
            // next combination in lexicographic order
            int pos = size - 1;
            while (pos >= 0 && pick[pos] == static_cast<int>(verts.size()) - size + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int i = pos + 1; i < size; ++i) pick[i] = pick[i - 1] + 1;
        }
    }
    if (!have_result) throw std::invalid_argument("exact_fault_diameter: instance too small for omega");
    return best;
}

namespace detail {

// All simple uv-paths with at most ell edges, as index sequences. The DFS
// prunes with exact BFS distances to the target, so it only explores
// prefixes extendable within the bound.
inline std::vector<std::vector<int>> simple_paths_within(const Materialized& g, int iu, int iv,
                                                         int ell, SearchBudget& budget) {
    const std::vector<char> unblocked(g.verts.size(), 0);
    const std::vector<int> dist_to_target = bfs_levels(g, iv, unblocked, &budget);

    std::vector<std::vector<int>> found;
    std::vector<int> path{iu};
    std::vector<char> visited(g.verts.size(), 0);
    visited[iu] = 1;
    auto dfs = [&](auto&& self, int x) -> void {
        budget.charge();
        const int len = static_cast<int>(path.size()) - 1;
        if (dist_to_target[x] < 0 || len + dist_to_target[x] > ell) return;
        if (x == iv) {
            found.push_back(path);
            return;
        }
        for (int y : g.adj[x]) {
            if (visited[y]) continue;
            visited[y] = 1;
            path.push_back(y);
            self(self, y);
            path.pop_back();
            visited[y] = 0;
        }
    };
    dfs(dfs, iu);
    return found;
}

}  // namespace detail

// True iff omega pairwise internally disjoint uv-paths of length <= ell
// exist: exhaustive packing over all candidate simple paths, shortest
// first. Budget overruns throw, a wrong answer is never returned silently.
inline bool disjoint_paths_within(const GraphParams& params, const Vertex& u, const Vertex& v,
                                  int omega, int ell, SearchBudget& budget) {
    params.validate();
    if (u == v) throw std::invalid_argument("disjoint_paths_within: identical endpoints");
    if (omega < 1) throw std::invalid_argument("disjoint_paths_within: omega must be >= 1");
    make_vertex(u.coords(), params);
    make_vertex(v.coords(), params);
    if (ell < 1) return false;

    if (omega == 1) {  // a single path within ell is just a BFS distance check
        const auto d = bfs_distance(params, u, v);
        return d.has_value() && *d <= ell;
    }

    const detail::Materialized g(params);
    auto paths = detail::simple_paths_within(g, g.index.at(u), g.index.at(v), ell, budget);
    if (static_cast<int>(paths.size()) < omega) return false;
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    const std::size_t words = (g.verts.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> internal(paths.size(),
                                                     std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t t = 1; t + 1 < paths[i].size(); ++t)
            internal[i][paths[i][t] / 64] |= std::uint64_t{1} << (paths[i][t] % 64);

    std::vector<std::uint64_t> used(words, 0);
    auto pack = [&](auto&& self, std::size_t from, int chosen) -> bool {
        if (chosen == omega) return true;
        for (std::size_t i = from; i + (omega - chosen) <= paths.size(); ++i) {
            budget.charge();
            bool clash = false;
            for (std::size_t w = 0; w < words && !clash; ++w) clash = (used[w] & internal[i][w]) != 0;
            if (clash) continue;
            for (std::size_t w = 0; w < words; ++w) used[w] |= internal[i][w];
            if (self(self, i + 1, chosen + 1)) return true;
            for (std::size_t w = 0; w < words; ++w) used[w] &= ~internal[i][w];
        }
        return false;
    };
    return pack(pack, 0, 0);
}

inline bool disjoint_paths_within(const GraphParams& params, const Vertex& u, const Vertex& v,
                                  int omega, int ell, std::uint64_t budget_limit = kDefaultWideBudget) {
    SearchBudget budget{budget_limit};
    return disjoint_paths_within(params, u, v, omega, ell, budget);
}

// Wide diameter: max over pairs of the minimal ell admitting omega disjoint
// paths, searched upward from h(u,v). One budget covers the whole call.
// Pairs that already meet the running maximum are confirmed and skipped.
inline DiameterReport wide_diameter_report(const GraphParams& params, int omega,
                                           std::uint64_t budget_limit = kDefaultWideBudget) {
    params.validate();
    if (omega < 1) throw std::invalid_argument("wide diameter: omega must be >= 1");
    const std::vector<Vertex> verts = enumerate_vertices(params);
    if (verts.size() < 2) throw std::invalid_argument("wide diameter: trivial graph");
    const int max_len = static_cast<int>(verts.size()) - 1;

    SearchBudget budget{budget_limit};
    DiameterReport best{0, {verts[0], verts[0]}, {}};
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const int lo = h_distance(verts[i], verts[j]);
            if (*best.value >= lo && disjoint_paths_within(params, verts[i], verts[j], omega, *best.value, budget))
                continue;  // this pair's minimum cannot raise the maximum
            int ell = std::max(lo, *best.value + 1);
            while (!disjoint_paths_within(params, verts[i], verts[j], omega, ell, budget)) {
                ++ell;
                if (ell > max_len)
                    throw std::domain_error("wide diameter: no " + std::to_string(omega) +
                                            " disjoint paths between " + to_string(verts[i]) + " and " +
                                            to_string(verts[j]) + "; instance is not that connected");
            }
            best.value = ell;
            best.witness_pair = {verts[i], verts[j]};
        }
    return best;
}

inline int exact_wide_diameter(const GraphParams& params, int omega,
                               std::uint64_t budget_limit = kDefaultWideBudget) {
    return *wide_diameter_report(params, omega, budget_limit).value;
}

// True iff every shortest uv-path passes through w: counts shortest paths on
// the BFS predecessor DAG and compares the through-w count with the total.
inline bool all_shortest_paths_through(const GraphParams& params, const Vertex& u, const Vertex& v,
                                       const Vertex& w) {
    params.validate();
    if (u == v) throw std::invalid_argument("all_shortest_paths_through: identical endpoints");
    make_vertex(u.coords(), params);
    make_vertex(v.coords(), params);
    make_vertex(w.coords(), params);

    const detail::Materialized g(params);
    const std::vector<char> unblocked(g.verts.size(), 0);
    const int iu = g.index.at(u), iv = g.index.at(v), iw = g.index.at(w);
    const std::vector<int> du = detail::bfs_levels(g, iu, unblocked);
    const std::vector<int> dv = detail::bfs_levels(g, iv, unblocked);
    if (du[iv] < 0) return false;  // no shortest path at all

    // path counts along increasing BFS level
    auto count_from = [&](int src, const std::vector<int>& dist) {
        std::vector<int> order(g.verts.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist[a] < dist[b]; });
        std::vector<std::uint64_t> cnt(g.verts.size(), 0);
        cnt[src] = 1;
        for (int x : order)
            for (int y : g.adj[x])
                if (dist[y] == dist[x] + 1) cnt[y] += cnt[x];
        return cnt;
    };
    const std::vector<std::uint64_t> cu = count_from(iu, du);
    const std::vector<std::uint64_t> cv = count_from(iv, dv);
    const std::uint64_t total = cu[iv];
    const std::uint64_t through = (du[iw] + dv[iw] == du[iv]) ? cu[iw] * cv[iw] : 0;
    return total > 0 && through == total;
}

}  // namespace intsimplex::oracles
