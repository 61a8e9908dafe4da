#pragma once
#include <array>
#include <optional>
#include "partition.hpp"
#include "tile.hpp"

namespace lrm {

// A nest is a 150-degree corner of the hexagon together with its slot grid.
// E points along the hexagon side of length d, N along the side of length
// n-d; N is E rotated by -150 degrees.  Slot (u,t) is the thin rhombus at
// corner + u*E + t*N.
struct Nest {
    ExactPoint corner;
    int dirE = 0, dirN = 0;  // direction indices (multiples of 30 degrees)
    ExactPoint E() const { return unit_dir(dirE); }
    ExactPoint N() const { return unit_dir(dirN); }
};

inline Tile nest_slot(const Nest& x, int u, int t) {
    ExactPoint P = x.corner + (i64)u * x.E() + (i64)t * x.N();
    // cross(N,E) > 0, so this order is counterclockwise
    return make_tile({P, P + x.N(), P + x.N() + x.E(), P + x.E()});
}

// Express P in nest coordinates: P = corner + x*E + y*N.  Returns nothing if
// the coordinates are not integers.
inline std::optional<std::pair<int, int>> nest_coords(const Nest& x, const ExactPoint& P) {
    ExactPoint v = P - x.corner;
    Quad4 cx = cross(v, x.N());        // = X * cross(E,N)
    Quad4 cy = cross(x.E(), v);        // = Y * cross(E,N)
    // cross(E,N) = -1/2 exactly (N is E rotated -150), i.e. Quad4{-2,0}
    if (cx.q != 0 || cy.q != 0 || cx.p % 2 || cy.p % 2) return std::nullopt;
    return std::make_pair((int)(-cx.p / 2), (int)(-cy.p / 2));
}

// The mosaic hexagon for Gr(d,n), in the frame where the image of the
// puzzle's lower-left corner is the origin.  Sides alternate lengths
// n-d and d; interior angles alternate 90 degrees (at the three images of
// the puzzle corners) and 150 degrees (at the three nests).
struct HexRegion {
    BoxParams box;
    std::vector<ExactPoint> poly;       // CCW: Q1, Vc, Q2, Vb, Q3, Va
    std::array<Nest, 3> nest;           // 0 = A (left side), 1 = B (right), 2 = C (bottom)
    std::array<ExactPoint, 3> primed;   // Q1 (lower-left), Q2 (lower-right), Q3 (apex)
};

inline HexRegion build_hex_region(const BoxParams& box) {
    i64 d = box.d, m = box.cols();
    ExactPoint Q1{};
    ExactPoint Q2 = m * unit_dir(0) + d * unit_dir(11);
    ExactPoint Q3 = m * unit_dir(2) + d * unit_dir(1);
    ExactPoint Va = Q3 + d * unit_dir(7);
    ExactPoint Vb = Q2 + d * unit_dir(3);
    ExactPoint Vc = Q1 + d * unit_dir(11);
    HexRegion r;
    r.box = box;
    r.poly = {Q1, Vc, Q2, Vb, Q3, Va};
    r.nest = {Nest{Va, 1, 8}, Nest{Vb, 9, 4}, Nest{Vc, 5, 0}};
    r.primed = {Q1, Q2, Q3};
    return r;
}

}  // namespace lrm
