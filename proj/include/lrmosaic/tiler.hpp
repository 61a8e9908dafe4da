#pragma once
#include <functional>
#include <set>
#include <utility>
#include "tile.hpp"

namespace lrm {

// Brute-force tiling enumerator, independent of the puzzle machinery.  It
// fills a region corner by corner: take the smallest uncovered boundary edge
// and try every tile that can be glued to it from the inside.  Used to
// cross-check mosaic counts against puzzle counts.

namespace detail {

using DirEdge = std::pair<ExactPoint, ExactPoint>;

// Candidate tiles having the directed unit edge v->w on their boundary with
// the tile interior on the left: one triangle, one square, and the two
// chiralities of the thin rhombus.
inline std::vector<Tile> tiles_on_edge(const ExactPoint& v, const ExactPoint& w) {
    ExactPoint e = w - v;
    std::vector<Tile> out;
    out.push_back(make_tile({v, w, v + rotate30(e, 2)}));
    for (int k : {1, 3, 5}) {  // 30: thin rhombus, 90: square, 150: thin rhombus
        ExactPoint s = rotate30(e, k);
        out.push_back(make_tile({v, w, w + s, v + s}));
    }
    return out;
}

struct TilingSearch {
    std::set<DirEdge> boundary;  // directed unit edges, region interior on the left
    Patch placed;
    ExactArea remaining{0, 0};
    const std::function<void(const Patch&)>* emit = nullptr;

    // Interior wedge (in 30-degree steps) available at vertex p
    // counterclockwise from direction `from_dir`, i.e. up to the first
    // boundary edge leaving p in that sweep (either orientation).
    int wedge_steps(const ExactPoint& p, int from_dir, bool ccw) const {
        int best = 12;
        for (const DirEdge& e : boundary) {
            int dir = -1;
            if (e.first == p) dir = dir_of_unit(e.second - e.first);
            else if (e.second == p) dir = dir_of_unit(e.first - e.second);
            else continue;
            int steps = ccw ? ((dir - from_dir) % 12 + 12) % 12
                            : ((from_dir - dir) % 12 + 12) % 12;
            if (steps > 0 && steps < best) best = steps;
        }
        return best;
    }

    void run() {
        if (boundary.empty()) {
            (*emit)(placed);
            return;
        }
        DirEdge seed = *boundary.begin();
        int dir_vw = dir_of_unit(seed.second - seed.first);
        int wedge_v = wedge_steps(seed.first, dir_vw, true);
        int wedge_w = wedge_steps(seed.second, (dir_vw + 6) % 12, false);
        static constexpr int angle_v[4] = {2, 1, 3, 5};  // tile corner at v, in 30-degree steps
        static constexpr int angle_w[4] = {2, 5, 3, 1};  // same tile's corner at w
        int idx = 0;
        for (const Tile& t : tiles_on_edge(seed.first, seed.second)) {
            int i = idx++;
            if (angle_v[i] > wedge_v || angle_w[i] > wedge_w) continue;
            if ((remaining - tile_area(t)).sign() < 0) continue;
            // Merge the tile's edges into the boundary: a tile edge that
            // coincides with a boundary edge consumes it; otherwise its
            // reverse becomes new boundary.  A clash (edge already present
            // with the region on the other side) means the tile pokes
            // outside the uncovered region.
            std::vector<DirEdge> erased, inserted;
            bool ok = true;
            size_t m = t.verts.size();
            for (size_t i = 0; i < m && ok; i++) {
                DirEdge fwd{t.verts[i], t.verts[(i + 1) % m]};
                DirEdge rev{fwd.second, fwd.first};
                if (boundary.count(fwd)) {
                    boundary.erase(fwd);
                    erased.push_back(fwd);
                } else if (boundary.count(rev)) {
                    ok = false;
                } else {
                    boundary.insert(rev);
                    inserted.push_back(rev);
                }
            }
            if (ok) {
                placed.push_back(t);
                remaining = remaining - tile_area(t);
                run();
                remaining = remaining + tile_area(t);
                placed.pop_back();
            }
            for (const DirEdge& de : inserted) boundary.erase(de);
            for (const DirEdge& de : erased) boundary.insert(de);
        }
    }
};

}  // namespace detail

// Enumerate every edge-to-edge tiling of the CCW polygon `region` by unit
// triangles, unit squares and thin rhombi (all 30-degree orientations).
inline void enumerate_tilings(const std::vector<ExactPoint>& region,
                              const std::function<void(const Patch&)>& callback) {
    detail::TilingSearch s;
    for (auto& e : unit_edges_of_polygon(region)) s.boundary.insert(e);
    s.remaining = polygon_area(region);
    s.emit = &callback;
    s.run();
}

}  // namespace lrm
