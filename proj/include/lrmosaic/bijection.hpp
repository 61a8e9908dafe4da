#pragma once
// Bijections between mosaics and LR tableaux realized by flock migration:
// the tableau-of-mosaic map and its variants, its inverse, the commutors on
// mosaics and tableaux, and the 120-degree mosaic rotation.

#include <functional>
#include <optional>
#include <set>
#include <stdexcept>

#include "migrate.hpp"
#include "mosaic.hpp"
#include "tableau.hpp"

namespace lrm {

// The unique mosaic with boundary (empty, lambda, lambda-complement).
inline Mosaic canonical_mosaic(const BoxParams& box, const Partition& lambda) {
    std::optional<Mosaic> found;
    int count = 0;
    enumerate_mosaics(string_of_partition(Partition{}, box), string_of_partition(lambda, box),
                      string_of_partition(lambda.complement(box), box), [&](const Mosaic& m) {
                          found = m;
                          count++;
                      });
    if (count != 1) throw std::logic_error("canonical mosaic is not unique");
    return *found;
}

// Migrate a flock and pick, among the two compass directions consistent with
// its orientation, the one that lands in `target_nest`.  Mutates `tiles`.
inline MigrationResult migrate_flock_to(Patch& tiles, const HexRegion& region, const Flock& F,
                                        int target_nest) {
    const Nest& src = region.nest[F.nest];
    bool ne = std::set<int>{F.orient.dirE, F.orient.dirN} ==
              std::set<int>{src.dirE, src.dirN};
    Compass dirs[2] = {ne ? Compass::North : Compass::South, ne ? Compass::East : Compass::West};
    if (F.boxes.empty()) {
        MigrationResult res;
        res.flock = F;
        res.flock.nest = target_nest;
        res.flock.orient = nest_orientations(region.nest[target_nest])[0];
        return res;
    }
    for (Compass c : dirs) {
        Patch probe = tiles;
        MigrationResult res = migrate_flock(probe, region, F, c);
        if (res.flock.nest == target_nest) {
            tiles = std::move(probe);
            return res;
        }
    }
    throw std::logic_error("no compass direction reaches the requested nest");
}

// Which of the four reading orientations of nest x the orientation is:
// 0 = rows along E (transposed), 1 = rows along N, 2 = 0 reversed,
// 3 = 1 reversed.
inline int orientation_type(const Nest& x, const Orientation& o) {
    auto os = nest_orientations(x);
    for (int i = 0; i < 4; i++)
        if (os[i].dirE == o.dirE && os[i].dirN == o.dirN) return i;
    throw std::logic_error("orientation is not valid at this nest");
}

// Read the landed flock as an LR tableau.  Under a direct orientation
// (types 0, 1) the whole nest content reads as a straight diagram lambda and
// the flock is its outer skew part lambda/mu.  Under a reversed orientation
// (types 2, 3) the same configuration reads rotated 180 degrees: anchoring it
// at the far corner of the d x (n-d) box (or its transpose), the nest content
// becomes the box-complement of a straight diagram, each row a right-justified
// segment, and the flock is the *left* part of each segment, giving the
// complementary skew shape mu-complement / lambda-complement.
inline LRTableau tableau_of_landed_flock(const HexRegion& region, const Patch& tiles,
                                         const Flock& F) {
    const Nest& x = region.nest[F.nest];
    int type = orientation_type(x, F.orient);
    bool transposed = (type % 2 == 0), reversed = (type >= 2);
    int R = transposed ? region.box.cols() : region.box.d;
    int C = transposed ? region.box.d : region.box.cols();
    std::map<Cell, int> entries;
    for (auto& [tile, v] : flock_cells(region, F)) entries.insert({tile, v});
    std::set<Cell> all;
    for (auto& [slot, idx] : occupied_slots(tiles, x))
        all.insert(cell_of_slot(x, F.orient, slot.first, slot.second));
    if (reversed) {
        // anchor the 180-degree-rotated reading at the box's far corner
        std::set<Cell> shifted;
        std::map<Cell, int> ents;
        for (const Cell& c : all) shifted.insert({c.row + R - 1, c.col + C - 1});
        for (auto& [c, v] : entries) ents.insert({{c.row + R - 1, c.col + C - 1}, v});
        all = std::move(shifted);
        entries = std::move(ents);
    }
    for (auto& [c, v] : entries)
        if (!all.count(c)) throw std::logic_error("flock cell outside its nest");
    for (const Cell& c : all)
        if (c.row < 0 || c.row >= R || c.col < 0 || c.col >= C)
            throw std::logic_error("nest cell outside the box");
    // per-row extents
    std::vector<int> lo(R, C), hi(R, 0), nflock(R, 0);
    int ncells = 0;
    for (const Cell& c : all) {
        lo[c.row] = std::min(lo[c.row], c.col);
        hi[c.row] = std::max(hi[c.row], c.col + 1);
        ncells++;
    }
    for (auto& [c, v] : entries) nflock[c.row]++;
    int span = 0;
    for (int r = 0; r < R; r++) span += (lo[r] < C) ? hi[r] - lo[r] : 0;
    if (span != ncells) throw std::logic_error("nest rows are not contiguous");
    std::vector<int> outer(R), inner(R);
    if (!reversed) {
        // straight reading: rows start at column 0, flock is the right part
        for (int r = 0; r < R; r++) {
            if (lo[r] < C && lo[r] != 0) throw std::logic_error("landed nest is not straight");
            outer[r] = (lo[r] < C) ? hi[r] : 0;
            inner[r] = outer[r] - nflock[r];
        }
        for (auto& [c, v] : entries)
            if (c.col < inner[c.row]) throw std::logic_error("flock is not the outer part");
    } else {
        // complement reading: rows end at column C, flock is the left part
        for (int r = 0; r < R; r++) {
            if (lo[r] < C && hi[r] != C) throw std::logic_error("landed nest is not straight");
            inner[r] = (lo[r] < C) ? lo[r] : C;
            outer[r] = inner[r] + nflock[r];
        }
        for (auto& [c, v] : entries)
            if (c.col >= outer[c.row]) throw std::logic_error("flock is not the inner part");
    }
    LRTableau t{SkewShape(Partition{std::move(outer)}, Partition{std::vector<int>(inner)})};
    for (auto& [c, v] : entries) t.entry_ref(c.row, c.col) = v;
    return t;
}

// Tableau of a mosaic: form the unique flock on nest A under the given
// orientation, migrate it to `target_nest`, and read off the tableau.
inline LRTableau mosaic_to_tableau(const Mosaic& m, const Orientation& oA, int target_nest) {
    HexRegion region = build_hex_region(m.box);
    Patch tiles = m.tiles;
    Flock F = canonical_flock(region, tiles, 0, oA);
    if (F.boxes.empty()) {
        // empty tableau; the (degenerate) shape still depends on the reading
        // type induced at the target nest, which is the source type reversed
        int type = orientation_type(region.nest[0], oA) ^ 2;
        Partition beta = mosaic_boundary(m)[target_nest];
        BoxParams tbox{m.box.cols(), m.box.n};
        Partition p = beta;
        if (type == 0) p = beta.conjugate();
        else if (type == 3) p = beta.complement(m.box);
        else if (type == 2) p = beta.conjugate().complement(tbox);
        return LRTableau{SkewShape(p, p)};
    }
    MigrationResult res = migrate_flock_to(tiles, region, F, target_nest);
    return tableau_of_landed_flock(region, tiles, res.flock);
}

// The primary bijection: the reversed transposed orientation on nest A,
// landing at B; a mosaic with boundary (alpha, beta, gamma) maps to a
// tableau with the same boundary data (content alpha, inner beta, outer
// gamma-complement).  Note the slot grid of a nest carries the transposed
// diagram of its partition, so the orientation whose rows run along the
// nest's N axis is the one that reads the partition untransposed.
inline LRTableau mosaic_to_tableau(const Mosaic& m) {
    HexRegion region = build_hex_region(m.box);
    return mosaic_to_tableau(m, nest_orientations(region.nest[0])[3], 1);
}

// The flock placing tableau f in nest `nest_idx`, rows along the nest's N
// axis (the orientation under which the nest content reads untransposed).
inline Flock flock_of_tableau(const HexRegion& region, int nest_idx, const LRTableau& f) {
    const Nest& x = region.nest[nest_idx];
    Flock F;
    F.nest = nest_idx;
    F.orient = Orientation{x.dirN, x.dirE};
    for (int r = 0; r < f.shape.outer.size(); r++)
        for (int c = f.shape.inner.part(r); c < f.shape.outer.part(r); c++)
            F.boxes.push_back({nest_slot(x, r, c), f.entry(r, c)});
    return F;
}

// Inverse of the primary bijection: form the unique mosaic with boundary
// (empty, lambda, lambda-complement), realize f as a flock in nest B, and
// migrate it to A.
inline Mosaic tableau_to_mosaic(const LRTableau& f, const BoxParams& box) {
    Mosaic m = canonical_mosaic(box, f.shape.outer);
    HexRegion region = build_hex_region(box);
    Flock F = flock_of_tableau(region, 1, f);
    if (!F.boxes.empty()) migrate_flock_to(m.tiles, region, F, 0);
    return m;
}

// ---- commutors ----

struct MosaicCommutation {
    Mosaic mosaic;          // boundary (beta, alpha, gamma)
    Orientation oA, oB;     // induced orientations; reversing from these
                            // recovers the original mosaic
};

// The commutor on mosaics: with chosen orientations on nests A and B, migrate
// the A-flock to C, the B-flock to A, then the parked flock from C to B.
inline MosaicCommutation commute_mosaic(const Mosaic& m, const Orientation& oA,
                                        const Orientation& oB) {
    HexRegion region = build_hex_region(m.box);
    Patch tiles = m.tiles;
    Flock F = canonical_flock(region, tiles, 0, oA);
    MigrationResult f1;
    if (!F.boxes.empty()) f1 = migrate_flock_to(tiles, region, F, 2);
    Flock G = canonical_flock(region, tiles, 1, oB);
    Orientation oA_new = oB;
    if (!G.boxes.empty()) oA_new = migrate_flock_to(tiles, region, G, 0).flock.orient;
    else {
        // the induced orientation is the <=60 degree rotation of oB valid at A
        bool ok = false;
        for (int k = -2; k <= 2 && !ok; k++) {
            Orientation cand{((oB.dirE + k) % 12 + 12) % 12, ((oB.dirN + k) % 12 + 12) % 12};
            for (const Orientation& v : nest_orientations(region.nest[0]))
                if (cand == v) { oA_new = cand; ok = true; }
        }
        if (!ok) throw std::logic_error("no induced orientation at A");
    }
    Orientation oB_new{(oA.dirE + 8) % 12, (oA.dirN + 8) % 12};  // 120 degrees clockwise
    if (!F.boxes.empty()) {
        Flock F1 = f1.flock;
        oB_new = migrate_flock_to(tiles, region, F1, 1).flock.orient;
    }
    return {Mosaic{m.box, std::move(tiles)}, oA_new, oB_new};
}

// The commutor on tableaux: park f (from nest B) at A, then move the
// leftover straight part of the nest across under the reversed orientation.
inline LRTableau commute_tableau(const LRTableau& f, const BoxParams& box) {
    Mosaic m = canonical_mosaic(box, f.shape.outer);
    HexRegion region = build_hex_region(box);
    Flock F = flock_of_tableau(region, 1, f);
    if (!F.boxes.empty()) migrate_flock_to(m.tiles, region, F, 0);
    const Nest& b = region.nest[1];
    if (occupied_slots(m.tiles, b).empty())
        return LRTableau{SkewShape(f.content(), f.content())};
    Flock G = canonical_flock(region, m.tiles, 1,
                              Orientation{(b.dirN + 6) % 12, (b.dirE + 6) % 12});
    MigrationResult res = migrate_flock_to(m.tiles, region, G, 0);
    return tableau_of_landed_flock(region, m.tiles, res.flock);
}

// ---- rotation ----

// Rotate a mosaic 120 degrees so that the boundary data (alpha, beta, gamma)
// becomes (gamma, alpha, beta).
inline Mosaic rotate_mosaic(const Mosaic& m) {
    HexRegion region = build_hex_region(m.box);
    ExactPoint c6{};
    for (const ExactPoint& v : region.poly) c6 = c6 + v;
    Mosaic out;
    out.box = m.box;
    for (const Tile& t : m.tiles) {
        std::vector<ExactPoint> vs;
        for (const ExactPoint& v : t.verts) vs.push_back(detail::rotate_about_c6(v, c6, 8));
        out.tiles.push_back(make_tile(std::move(vs)));
    }
    return out;
}

}  // namespace lrm
