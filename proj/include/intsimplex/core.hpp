// SPDX-FileCopyrightText: © 2026 intsimplex authors
//
// SPDX-License-Identifier: Apache-2.0
//
// Integer simplex T_m^n: vertices are nonnegative (n+1)-tuples summing to m,
// edges move one unit between two coordinates. Adjacency is implicit; the
// graph is never materialized here.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace intsimplex {

struct GraphParams {
    int n = 1;  // dimension: vertices have n+1 coordinates
    int m = 1;  // side length: coordinates sum to m

    void validate() const {
        if (n < 1) throw std::invalid_argument("GraphParams: dimension n must be >= 1");
        if (m < 1) throw std::invalid_argument("GraphParams: side length m must be >= 1");
    }

    friend bool operator==(const GraphParams&, const GraphParams&) = default;
};

inline std::uint64_t binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    std::uint64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * static_cast<std::uint64_t>(a - b + i) / i;
    return r;
}

// A vertex of T_m^n. Coordinates are stored in print order: position 0 holds
// index n (the leftmost coordinate), position n holds index 0. The natural
// vector ordering is therefore the lexicographic order on (v_n, ..., v_0).
class Vertex {
public:
    Vertex() = default;

    int dimension() const { return static_cast<int>(coords_.size()) - 1; }
    int side_sum() const { return std::accumulate(coords_.begin(), coords_.end(), 0); }
    const std::vector<int>& coords() const { return coords_; }

    // Access by coordinate index (n = leftmost, 0 = rightmost).
    int coord(int index) const { return coords_.at(coords_.size() - 1 - index); }

    // New vertex with one unit moved from index `from` to index `to`.
    Vertex transfer(int from, int to) const {
        if (coord(from) <= 0)
            throw std::invalid_argument("Vertex::transfer: source coordinate is zero");
        Vertex w = *this;
        w.coords_[coords_.size() - 1 - from] -= 1;
        w.coords_[coords_.size() - 1 - to] += 1;
        return w;
    }

    static Vertex unchecked(std::vector<int> coords) {
        Vertex v;
        v.coords_ = std::move(coords);
        return v;
    }

    friend bool operator==(const Vertex& a, const Vertex& b) { return a.coords_ == b.coords_; }
    friend bool operator!=(const Vertex& a, const Vertex& b) { return !(a == b); }
    friend bool operator<(const Vertex& a, const Vertex& b) { return a.coords_ < b.coords_; }
    friend bool operator>(const Vertex& a, const Vertex& b) { return b < a; }
    friend bool operator<=(const Vertex& a, const Vertex& b) { return !(b < a); }
    friend bool operator>=(const Vertex& a, const Vertex& b) { return !(a < b); }

private:
    std::vector<int> coords_;
};

using FaultSet = std::set<Vertex>;

inline Vertex make_vertex(const std::vector<int>& coords, const GraphParams& params) {
    params.validate();
    if (static_cast<int>(coords.size()) != params.n + 1)
        throw std::invalid_argument("make_vertex: expected " + std::to_string(params.n + 1) +
                                    " coordinates, got " + std::to_string(coords.size()));
    int sum = 0;
    for (int c : coords) {
        if (c < 0) throw std::invalid_argument("make_vertex: negative coordinate " + std::to_string(c));
        sum += c;
    }
    if (sum != params.m)
        throw std::invalid_argument("make_vertex: coordinates sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(params.m));
    return Vertex::unchecked(coords);
}

inline std::string to_string(const Vertex& v) {
    std::string s;
    for (std::size_t i = 0; i < v.coords().size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v.coords()[i]);
    }
    return s;
}

// Parses the textual form "2,0,0" (leftmost = index n) against an instance.
inline Vertex parse_vertex(const std::string& text, const GraphParams& params) {
    std::vector<int> coords;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_vertex: malformed coordinate '" + item + "' in '" + text + "'");
        }
        if (pos != item.size())
            throw std::invalid_argument("parse_vertex: malformed coordinate '" + item + "' in '" + text + "'");
        coords.push_back(value);
    }
    if (text.empty() || text.back() == ',')
        throw std::invalid_argument("parse_vertex: malformed vertex '" + text + "'");
    return make_vertex(coords, params);
}

namespace detail {
inline void require_same_instance(const Vertex& u, const Vertex& v, const char* op) {
    if (u.dimension() != v.dimension() || u.side_sum() != v.side_sum())
        throw std::invalid_argument(std::string(op) + ": vertices belong to different instances (" +
                                    to_string(u) + " vs " + to_string(v) + ")");
}
}  // namespace detail

inline int h_distance(const Vertex& u, const Vertex& v) {
    detail::require_same_instance(u, v, "h_distance");
    int sum = 0;
    for (std::size_t i = 0; i < u.coords().size(); ++i)
        sum += std::abs(u.coords()[i] - v.coords()[i]);
    return sum / 2;
}

inline bool is_adjacent(const Vertex& u, const Vertex& v) {
    detail::require_same_instance(u, v, "is_adjacent");
    return h_distance(u, v) == 1;
}

// All vertices one unit transfer away, in ascending vertex order.
// Size is n * |{i : v_i > 0}|.
inline std::vector<Vertex> neighbors(const Vertex& v) {
    const int n = v.dimension();
    std::vector<Vertex> out;
    for (int i = n; i >= 0; --i) {
        if (v.coord(i) == 0) continue;
        for (int j = n; j >= 0; --j)
            if (j != i) out.push_back(v.transfer(i, j));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every vertex of T_m^n exactly once, ascending lexicographic on (v_n,...,v_0).
// Count is binomial(n+m, m).
inline std::vector<Vertex> enumerate_vertices(const GraphParams& params) {
    params.validate();
    std::vector<Vertex> out;
    std::vector<int> coords(params.n + 1, 0);
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == params.n) {
            coords[pos] = remaining;
            out.push_back(Vertex::unchecked(coords));
            return;
        }
        for (int a = 0; a <= remaining; ++a) {
            coords[pos] = a;
            self(self, pos + 1, remaining - a);
        }
    };
    rec(rec, 0, params.m);
    return out;
}

// Index partition for a vertex pair: down = {i : u_i > v_i} (size p),
// up = {i : u_i < v_i} (size q), equal = the rest. Each list is sorted
// descending, the canonical order the rotation schedules start from.
struct PositionClassification {
    std::vector<int> down;
    std::vector<int> up;
    std::vector<int> equal;

    int p() const { return static_cast<int>(down.size()); }
    int q() const { return static_cast<int>(up.size()); }
};

inline PositionClassification classify_positions(const Vertex& u, const Vertex& v) {
    detail::require_same_instance(u, v, "classify_positions");
    PositionClassification c;
    for (int i = u.dimension(); i >= 0; --i) {
        if (u.coord(i) > v.coord(i)) c.down.push_back(i);
        else if (u.coord(i) < v.coord(i)) c.up.push_back(i);
        else c.equal.push_back(i);
    }
    return c;
}

}  // namespace intsimplex

template <>
struct std::hash<intsimplex::Vertex> {
    std::size_t operator()(const intsimplex::Vertex& v) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (int c : v.coords()) {
            h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};
