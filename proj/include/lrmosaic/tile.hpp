#pragma once
#include <vector>
#include <map>
#include <set>
#include <algorithm>
#include <stdexcept>
#include "exact.hpp"

namespace lrm {

// A tile is a unit-edge polygon with all edges in the twelve 30-degree
// directions: an equilateral triangle, a unit square, or a thin (30/150)
// rhombus.  Vertices are stored counterclockwise, rotated so the
// lexicographically smallest vertex comes first.

enum class TileKind { Triangle, Square, ThinRhombus };

struct Tile {
    TileKind kind;
    std::vector<ExactPoint> verts;  // CCW, canonical rotation

    bool operator==(const Tile& o) const { return verts == o.verts; }
    bool operator<(const Tile& o) const {
        return std::lexicographical_compare(verts.begin(), verts.end(),
                                            o.verts.begin(), o.verts.end(),
                                            point_less);
    }
};

inline std::vector<ExactPoint> canonical_cycle(std::vector<ExactPoint> v) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); i++)
        if (point_less(v[i], v[best])) best = i;
    std::rotate(v.begin(), v.begin() + best, v.end());
    return v;
}

inline Tile make_tile(std::vector<ExactPoint> verts) {
    size_t m = verts.size();
    if (m != 3 && m != 4) throw std::invalid_argument("tile must have 3 or 4 vertices");
    for (size_t i = 0; i < m; i++) {
        ExactPoint e = verts[(i + 1) % m] - verts[i];
        if (dir_of_unit(e) < 0) throw std::invalid_argument("tile edge not a unit lattice direction");
    }
    ExactArea a = polygon_area(verts);
    Tile t;
    t.verts = canonical_cycle(std::move(verts));
    if (m == 3) {
        if (!(a == ExactArea{0, 1})) throw std::invalid_argument("bad triangle");
        t.kind = TileKind::Triangle;
    } else if (a == ExactArea{4, 0}) {
        t.kind = TileKind::Square;
    } else if (a == ExactArea{2, 0}) {
        t.kind = TileKind::ThinRhombus;
    } else {
        throw std::invalid_argument("quadrilateral is neither square nor thin rhombus");
    }
    return t;
}

inline ExactArea tile_area(const Tile& t) {
    switch (t.kind) {
        case TileKind::Triangle: return {0, 1};
        case TileKind::Square: return {4, 0};
        default: return {2, 0};
    }
}

using Patch = std::vector<Tile>;

inline bool point_eq(const ExactPoint& a, const ExactPoint& b) { return a == b; }

// Break a polygon (vertex walk, sides possibly several units long) into its
// unit boundary edges, directed along the walk.
inline std::vector<std::pair<ExactPoint, ExactPoint>>
unit_edges_of_polygon(const std::vector<ExactPoint>& poly) {
    std::vector<std::pair<ExactPoint, ExactPoint>> out;
    size_t m = poly.size();
    for (size_t i = 0; i < m; i++) {
        ExactPoint a = poly[i], b = poly[(i + 1) % m];
        ExactPoint v = b - a;
        int dir = -1;  // unit direction parallel to v, same orientation
        for (int t = 0; t < 12 && dir < 0; t++)
            if (cross(v, unit_dir(t)).sign() == 0 && dot(v, unit_dir(t)).sign() > 0) dir = t;
        if (dir < 0) throw std::invalid_argument("polygon side not in a lattice direction");
        ExactPoint u = unit_dir(dir);
        ExactPoint cur = a;
        int guard = 0;
        while (!(cur == b)) {
            ExactPoint nxt = cur + u;
            out.push_back({cur, nxt});
            cur = nxt;
            if (++guard > 1000) throw std::logic_error("polygon side not an integer number of units");
        }
    }
    return out;
}

// Check that `tiles` is an edge-to-edge tiling of the region bounded by
// `region` (a CCW polygon walk).  Every interior unit edge must be shared by
// exactly two tiles, boundary edges by one, and those must match the region
// boundary exactly; areas must agree.
inline void validate_patch_tiling(const Patch& tiles,
                                  const std::vector<ExactPoint>& region) {
    std::map<std::vector<ExactPoint>, int> count;  // undirected edge -> multiplicity
    auto key = [](ExactPoint a, ExactPoint b) {
        if (point_less(b, a)) std::swap(a, b);
        return std::vector<ExactPoint>{a, b};
    };
    ExactArea total{0, 0};
    for (const Tile& t : tiles) {
        total = total + tile_area(t);
        size_t m = t.verts.size();
        for (size_t i = 0; i < m; i++)
            count[key(t.verts[i], t.verts[(i + 1) % m])]++;
    }
    std::set<std::vector<ExactPoint>> boundary;
    for (auto& e : unit_edges_of_polygon(region))
        boundary.insert(key(e.first, e.second));
    for (auto& [e, c] : count) {
        if (c > 2) throw std::logic_error("edge shared by more than two tiles");
        bool on_boundary = boundary.count(e) > 0;
        if (c == 1 && !on_boundary) throw std::logic_error("unmatched interior edge");
        if (c == 2 && on_boundary) throw std::logic_error("boundary edge covered twice");
    }
    for (auto& e : boundary)
        if (!count.count(e)) throw std::logic_error("region boundary edge not covered");
    ExactArea want = polygon_area(region);
    if (!(total == want)) throw std::logic_error("tile areas do not sum to region area");
}

}  // namespace lrm
