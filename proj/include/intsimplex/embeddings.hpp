// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// The triangular mesh T_m and the tripy TP_L in their native coordinates,
// and the maps identifying them with T_m^2 and T_L^3.

#pragma once

#include "intsimplex/core.hpp"

namespace intsimplex::embeddings {

struct MeshVertex {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const MeshVertex&, const MeshVertex&) = default;
};

struct TripyVertex {
    int level = 0;
    int x = 0;
    int y = 0;

    friend auto operator<=>(const TripyVertex&, const TripyVertex&) = default;
};

inline MeshVertex make_mesh_vertex(int x, int y, int side) {
    if (x < 0 || y < 0) throw std::invalid_argument("make_mesh_vertex: negative coordinate");
    if (x + y > side)
        throw std::invalid_argument("make_mesh_vertex: x+y = " + std::to_string(x + y) +
                                    " exceeds side " + std::to_string(side));
    return {x, y};
}

inline TripyVertex make_tripy_vertex(int level, int x, int y, int levels) {
    if (level < 0 || level > levels)
        throw std::invalid_argument("make_tripy_vertex: level " + std::to_string(level) +
                                    " out of range 0.." + std::to_string(levels));
    if (x < 0 || y < 0) throw std::invalid_argument("make_tripy_vertex: negative coordinate");
    if (x + y > level)
        throw std::invalid_argument("make_tripy_vertex: x+y = " + std::to_string(x + y) +
                                    " exceeds level " + std::to_string(level));
    return {level, x, y};
}

// "x,y"
inline std::string to_string(const MeshVertex& v) {
    return std::to_string(v.x) + "," + std::to_string(v.y);
}

// "k:x,y"
inline std::string to_string(const TripyVertex& v) {
    return std::to_string(v.level) + ":" + std::to_string(v.x) + "," + std::to_string(v.y);
}

inline MeshVertex parse_mesh_vertex(const std::string& text, int side) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("parse_mesh_vertex: expected 'x,y', got '" + text + "'");
    try {
        return make_mesh_vertex(std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1)),
                                side);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_mesh_vertex: malformed vertex '" + text + "'");
    }
}

inline TripyVertex parse_tripy_vertex(const std::string& text, int levels) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("parse_tripy_vertex: expected 'k:x,y', got '" + text + "'");
    const auto comma = text.find(',', colon);
    if (comma == std::string::npos)
        throw std::invalid_argument("parse_tripy_vertex: expected 'k:x,y', got '" + text + "'");
    try {
        return make_tripy_vertex(std::stoi(text.substr(0, colon)),
                                 std::stoi(text.substr(colon + 1, comma - colon - 1)),
                                 std::stoi(text.substr(comma + 1)), levels);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_tripy_vertex: malformed vertex '" + text + "'");
    }
}

// Unit grid step, or the (x+1,y-1) / (x-1,y+1) diagonal.
inline bool mesh_adjacent(const MeshVertex& a, const MeshVertex& b) {
    const int dx = b.x - a.x, dy = b.y - a.y;
    if (std::abs(dx) + std::abs(dy) == 1) return true;
    return (dx == 1 && dy == -1) || (dx == -1 && dy == 1);
}

// Same-level mesh adjacency, or the parent/child relation: (k,(x,y)) is
// connected to (k+1,(x,y)), (k+1,(x+1,y)) and (k+1,(x,y+1)).
inline bool tripy_adjacent(const TripyVertex& a, const TripyVertex& b) {
    if (a.level == b.level) return mesh_adjacent({a.x, a.y}, {b.x, b.y});
    const TripyVertex& lo = a.level < b.level ? a : b;
    const TripyVertex& hi = a.level < b.level ? b : a;
    if (hi.level != lo.level + 1) return false;
    return (hi.x == lo.x && hi.y == lo.y) || (hi.x == lo.x + 1 && hi.y == lo.y) ||
           (hi.x == lo.x && hi.y == lo.y + 1);
}

inline std::vector<MeshVertex> enumerate_mesh_vertices(int side) {
    if (side < 1) throw std::invalid_argument("enumerate_mesh_vertices: side must be >= 1");
    std::vector<MeshVertex> out;
    for (int x = 0; x <= side; ++x)
        for (int y = 0; x + y <= side; ++y) out.push_back({x, y});
    return out;
}

inline std::vector<TripyVertex> enumerate_tripy_vertices(int levels) {
    if (levels < 1) throw std::invalid_argument("enumerate_tripy_vertices: levels must be >= 1");
    std::vector<TripyVertex> out;
    for (int k = 0; k <= levels; ++k)
        for (int x = 0; x <= k; ++x)
            for (int y = 0; x + y <= k; ++y) out.push_back({k, x, y});
    return out;
}

// (x,y) in T_m -> (m-(x+y), x, y) in T_m^2.
inline Vertex sigma1(const MeshVertex& a, int side) {
    make_mesh_vertex(a.x, a.y, side);
    return make_vertex({side - (a.x + a.y), a.x, a.y}, GraphParams{2, side});
}

// (k,(x,y)) in TP_L -> (L-k, k-(x+y), x, y) in T_L^3. Validated as an
// isomorphism by verify_isomorphism; see sigma2_uncorrected for the naive
// direct-substitution map it replaces.
inline Vertex sigma2(const TripyVertex& a, int levels) {
    make_tripy_vertex(a.level, a.x, a.y, levels);
    return make_vertex({levels - a.level, a.level - (a.x + a.y), a.x, a.y}, GraphParams{3, levels});
}

// The naive map (L-(k+x+y), k, x, y). Not a valid embedding: the leading
// coordinate goes negative whenever k+x+y > L, e.g. (2,(1,0)) with L=2.
// Kept as a raw tuple so the regression test can exhibit the failure.
inline std::vector<int> sigma2_uncorrected(const TripyVertex& a, int levels) {
    return {levels - (a.level + a.x + a.y), a.level, a.x, a.y};
}

// True iff `map` is a bijection between the two vertex sets that preserves
// adjacency and non-adjacency in both directions.
template <typename VertexA, typename VertexB, typename MapFn, typename AdjA, typename AdjB>
bool verify_isomorphism(const std::vector<VertexA>& verts_a, const std::vector<VertexB>& verts_b,
                        MapFn&& map, AdjA&& adjacent_a, AdjB&& adjacent_b) {
    if (verts_a.size() != verts_b.size()) return false;
    const std::set<VertexB> universe(verts_b.begin(), verts_b.end());
    if (universe.size() != verts_b.size()) return false;

    std::vector<VertexB> image;
    image.reserve(verts_a.size());
    std::set<VertexB> image_set;
    for (const VertexA& a : verts_a) {
        VertexB b = map(a);
        if (!universe.count(b) || !image_set.insert(b).second) return false;
        image.push_back(std::move(b));
    }
    for (std::size_t i = 0; i < verts_a.size(); ++i)
        for (std::size_t j = i + 1; j < verts_a.size(); ++j)
            if (adjacent_a(verts_a[i], verts_a[j]) != adjacent_b(image[i], image[j])) return false;
    return true;
}

}  // namespace intsimplex::embeddings
