// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Disjoint path containers for T_m^n. For a pair with p coordinates above
// the target and q below, the container holds p*q shortest paths built from
// rotational coordinate schedules plus one length-(h+1) detour per equal
// coordinate, n+1-(p+q)+pq internally disjoint paths in total.

#pragma once

#include <optional>
#include <set>

#include "intsimplex/core.hpp"

namespace intsimplex::routing {

struct Path {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    const Vertex& source() const { return vertices.front(); }
    const Vertex& target() const { return vertices.back(); }

    friend bool operator==(const Path& a, const Path& b) { return a.vertices == b.vertices; }
};

// First defect of a path, or nullopt if it is a valid simple path. Checks
// only core adjacency, nothing from the construction below.
inline std::optional<std::string> path_defect(const Path& path) {
    if (path.vertices.empty()) return "path is empty";
    std::set<Vertex> seen;
    for (const Vertex& v : path.vertices)
        if (!seen.insert(v).second) return "vertex " + to_string(v) + " repeats";
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
        if (!is_adjacent(path.vertices[i], path.vertices[i + 1]))
            return "step " + to_string(path.vertices[i]) + " -> " + to_string(path.vertices[i + 1]) +
                   " is not an edge";
    return std::nullopt;
}

struct RotationSchedule {
    std::vector<int> order;
};

// The r-th rotational ordering of an index set: canonical descending order
// rotated left by r-1. r ranges over 1..|positions|.
inline RotationSchedule rotation(std::vector<int> positions, int r) {
    if (positions.empty()) throw std::invalid_argument("rotation: empty position set");
    if (r < 1 || r > static_cast<int>(positions.size()))
        throw std::invalid_argument("rotation: rotation number " + std::to_string(r) +
                                    " out of range 1.." + std::to_string(positions.size()));
    std::sort(positions.begin(), positions.end(), std::greater<int>());
    std::rotate(positions.begin(), positions.begin() + (r - 1), positions.end());
    return RotationSchedule{std::move(positions)};
}

namespace detail {

// Walk from u to v: each edge moves one unit from the active down coordinate
// to the active up coordinate. A schedule advances once its coordinate's
// surplus (resp. deficit) is exhausted, so the walk has exactly h(u,v) edges.
inline Path scheduled_walk(const Vertex& u, const Vertex& v, const RotationSchedule& up,
                           const RotationSchedule& down) {
    std::vector<int> deficit, surplus;
    for (int i : up.order) deficit.push_back(v.coord(i) - u.coord(i));
    for (int i : down.order) surplus.push_back(u.coord(i) - v.coord(i));

    Path path{{u}};
    Vertex w = u;
    std::size_t ui = 0, di = 0;
    const int steps = h_distance(u, v);
    for (int t = 0; t < steps; ++t) {
        while (surplus[di] == 0) ++di;
        while (deficit[ui] == 0) ++ui;
        w = w.transfer(down.order[di], up.order[ui]);
        --surplus[di];
        --deficit[ui];
        path.vertices.push_back(w);
    }
    return path;
}

}  // namespace detail

// Shortest uv-path for one (up, down) schedule combination.
// up_rot in 1..q, down_rot in 1..p.
inline Path construct_short_path(const Vertex& u, const Vertex& v, int up_rot, int down_rot) {
    if (u == v) throw std::invalid_argument("construct_short_path: identical endpoints");
    const PositionClassification pc = classify_positions(u, v);
    return detail::scheduled_walk(u, v, rotation(pc.up, up_rot), rotation(pc.down, down_rot));
}

// Detour through equal coordinate k: u -> u' -> ... -> v' -> v where the
// first edge moves a unit from the highest down coordinate into k and the
// last drains k into the lowest up coordinate. Every internal vertex carries
// v_k + 1 at coordinate k, which is what keeps detours off all other paths.
inline Path construct_detour_path(const Vertex& u, const Vertex& v, int k) {
    if (u == v) throw std::invalid_argument("construct_detour_path: identical endpoints");
    const PositionClassification pc = classify_positions(u, v);
    if (std::find(pc.equal.begin(), pc.equal.end(), k) == pc.equal.end())
        throw std::invalid_argument("construct_detour_path: index " + std::to_string(k) +
                                    " is not an equal position");
    const int highest_down = pc.down.front();  // descending order
    const int lowest_up = pc.up.back();

    const Vertex u_in = u.transfer(highest_down, k);
    const Vertex v_in = v.transfer(lowest_up, k);

    Path path{{u}};
    if (u_in == v_in) {
        path.vertices.push_back(u_in);
    } else {
        Path inner = construct_short_path(u_in, v_in, 1, 1);
        path.vertices.insert(path.vertices.end(), inner.vertices.begin(), inner.vertices.end());
    }
    path.vertices.push_back(v);
    return path;
}

struct Container {
    Vertex source;
    Vertex target;
    std::vector<Path> short_paths;   // p*q paths of length h(u,v), (up_rot, down_rot) order
    std::vector<Path> detour_paths;  // n+1-(p+q) paths of length h(u,v)+1, ascending k

    std::size_t size() const { return short_paths.size() + detour_paths.size(); }

    std::vector<Path> all_paths() const {
        std::vector<Path> out = short_paths;
        out.insert(out.end(), detour_paths.begin(), detour_paths.end());
        return out;
    }
};

inline Container build_container(const Vertex& u, const Vertex& v) {
    if (u == v) throw std::invalid_argument("build_container: identical endpoints");
    const PositionClassification pc = classify_positions(u, v);
    Container c{u, v, {}, {}};
    for (int up_rot = 1; up_rot <= pc.q(); ++up_rot)
        for (int down_rot = 1; down_rot <= pc.p(); ++down_rot)
            c.short_paths.push_back(construct_short_path(u, v, up_rot, down_rot));
    for (auto it = pc.equal.rbegin(); it != pc.equal.rend(); ++it)  // ascending k
        c.detour_paths.push_back(construct_detour_path(u, v, *it));
    return c;
}

// First defect of a container against its contract, or nullopt. Validation
// relies on core adjacency only, never on how the paths were built.
inline std::optional<std::string> container_defect(const Container& c) {
    const PositionClassification pc = classify_positions(c.source, c.target);
    const int h = h_distance(c.source, c.target);
    const int n = c.source.dimension();
    if (static_cast<int>(c.short_paths.size()) != pc.p() * pc.q())
        return "expected " + std::to_string(pc.p() * pc.q()) + " short paths, have " +
               std::to_string(c.short_paths.size());
    if (static_cast<int>(c.detour_paths.size()) != n + 1 - (pc.p() + pc.q()))
        return "expected " + std::to_string(n + 1 - (pc.p() + pc.q())) + " detour paths, have " +
               std::to_string(c.detour_paths.size());

    const auto paths = c.all_paths();
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const Path& path = paths[i];
        if (auto defect = path_defect(path)) return "path " + std::to_string(i) + ": " + *defect;
        if (path.source() != c.source || path.target() != c.target)
            return "path " + std::to_string(i) + " does not join the endpoints";
        const int want = i < c.short_paths.size() ? h : h + 1;
        if (path.length() != want)
            return "path " + std::to_string(i) + " has length " + std::to_string(path.length()) +
                   ", expected " + std::to_string(want);
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        std::set<Vertex> internal(paths[i].vertices.begin() + 1, paths[i].vertices.end() - 1);
        for (std::size_t j = i + 1; j < paths.size(); ++j)
            for (std::size_t t = 1; t + 1 < paths[j].vertices.size(); ++t)
                if (internal.count(paths[j].vertices[t]))
                    return "paths " + std::to_string(i) + " and " + std::to_string(j) +
                           " share internal vertex " + to_string(paths[j].vertices[t]);
    }
    return std::nullopt;
}

// Fault-avoiding route: the first container path (short paths first, in
// rotation order) whose internal vertices dodge the fault set. Width
// n+1-(p+q)+pq >= n > |faults| guarantees one exists.
inline Path route_avoiding(const Vertex& u, const Vertex& v, const FaultSet& faults) {
    const int n = u.dimension();
    const GraphParams params{n, u.side_sum()};
    for (const Vertex& f : faults) make_vertex(f.coords(), params);
    if (faults.count(u)) throw std::invalid_argument("route_avoiding: source is faulty");
    if (faults.count(v)) throw std::invalid_argument("route_avoiding: target is faulty");
    if (static_cast<int>(faults.size()) > n - 1)
        throw std::invalid_argument("route_avoiding: " + std::to_string(faults.size()) +
                                    " faults exceed the guaranteed tolerance of " + std::to_string(n - 1));
    if (u == v) return Path{{u}};

    for (const Path& path : build_container(u, v).all_paths()) {
        bool clear = true;
        for (std::size_t i = 1; i + 1 < path.vertices.size() && clear; ++i)
            clear = faults.count(path.vertices[i]) == 0;
        if (clear) return path;
    }
    throw std::logic_error("route_avoiding: no fault-free container path");  // unreachable
}

// omega container paths minimizing the maximum length. Short paths come
// first, so the leading omega paths are exactly that minimum.
inline std::vector<Path> select_width(const Container& container, int omega) {
    if (omega < 1 || omega > static_cast<int>(container.size()))
        throw std::invalid_argument("select_width: width " + std::to_string(omega) +
                                    " out of range 1.." + std::to_string(container.size()));
    const auto paths = container.all_paths();
    return {paths.begin(), paths.begin() + omega};
}

}  // namespace intsimplex::routing
