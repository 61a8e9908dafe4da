#pragma once
#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "region.hpp"
#include "tableau.hpp"

namespace lrm {

// Migration: the operation that moves a flock of thin rhombi from one nest of
// a mosaic to another, one rhombus at a time, by repeatedly rotating a small
// symmetric hexagon of tiles around the travelling rhombus.

// An orientation is a pair of unit lattice directions 150 degrees apart; for
// a nest it must be parallel to the cone sides.  E is the "east" axis of the
// tableau identification, N the "north" axis.
struct Orientation {
    int dirE = 0, dirN = 0;
    ExactPoint E() const { return unit_dir(dirE); }
    ExactPoint N() const { return unit_dir(dirN); }
    bool operator==(const Orientation&) const = default;
};

inline std::array<Orientation, 4> nest_orientations(const Nest& x) {
    int e = x.dirE, n = x.dirN;
    return {Orientation{e, n}, Orientation{n, e},
            Orientation{(e + 6) % 12, (n + 6) % 12},
            Orientation{(n + 6) % 12, (e + 6) % 12}};
}

enum class Compass { North, East, South, West };

inline int compass_dir(const Orientation& o, Compass c) {
    switch (c) {
        case Compass::North: return o.dirN;
        case Compass::East: return o.dirE;
        case Compass::South: return (o.dirN + 6) % 12;
        default: return (o.dirE + 6) % 12;
    }
}

struct FlockRhombus {
    Tile tile;
    int entry = 0;
};

struct Flock {
    int nest = 0;  // index into HexRegion::nest
    Orientation orient;
    std::vector<FlockRhombus> boxes;
};

// ---- nest slot bookkeeping ----

// If `t` is a thin rhombus occupying slot (u,t) of the nest, return (u,t).
inline std::optional<std::pair<int, int>> slot_of(const Nest& x, const Tile& t) {
    if (t.kind != TileKind::ThinRhombus) return std::nullopt;
    int umin = 0, tmin = 0;
    bool first = true;
    std::set<std::pair<int, int>> got;
    for (const ExactPoint& v : t.verts) {
        auto c = nest_coords(x, v);
        if (!c) return std::nullopt;
        got.insert(*c);
        if (first || c->first < umin) umin = c->first;
        if (first || c->second < tmin) tmin = c->second;
        first = false;
    }
    std::set<std::pair<int, int>> want = {{umin, tmin}, {umin + 1, tmin},
                                          {umin, tmin + 1}, {umin + 1, tmin + 1}};
    if (got != want || umin < 0 || tmin < 0) return std::nullopt;
    return std::make_pair(umin, tmin);
}

// slot -> index into `tiles`, over all rhombi sitting in this nest's grid
inline std::map<std::pair<int, int>, size_t> occupied_slots(const Patch& tiles, const Nest& x) {
    std::map<std::pair<int, int>, size_t> out;
    for (size_t i = 0; i < tiles.size(); i++)
        if (auto s = slot_of(x, tiles[i])) out[*s] = i;
    return out;
}

inline bool is_young(const std::set<std::pair<int, int>>& s) {
    for (auto& [u, t] : s) {
        if (u > 0 && !s.count({u - 1, t})) return false;
        if (t > 0 && !s.count({u, t - 1})) return false;
    }
    return true;
}

// cell of nest slot (u,t) as seen through an orientation variant of the nest
inline Cell cell_of_slot(const Nest& x, const Orientation& o, int u, int t) {
    if (o == Orientation{x.dirE, x.dirN}) return {t, u};
    if (o == Orientation{x.dirN, x.dirE}) return {u, t};
    if (o == Orientation{(x.dirE + 6) % 12, (x.dirN + 6) % 12}) return {-t, -u};
    if (o == Orientation{(x.dirN + 6) % 12, (x.dirE + 6) % 12}) return {-u, -t};
    throw std::invalid_argument("orientation does not belong to this nest");
}

// ---- LR fillings on raw cell sets ----

namespace detail {

// The cells must form a (translated) skew diagram: contiguous rows whose
// left and right ends move weakly west as we go north.
inline bool cells_are_skew(const std::set<Cell>& cells) {
    if (cells.empty()) return true;
    std::map<int, std::pair<int, int>> span;  // row -> [min col, max col]
    std::map<int, int> count;
    for (const Cell& c : cells) {
        auto it = span.find(c.row);
        if (it == span.end()) span[c.row] = {c.col, c.col};
        else {
            it->second.first = std::min(it->second.first, c.col);
            it->second.second = std::max(it->second.second, c.col);
        }
        count[c.row]++;
    }
    const std::pair<int, int>* prev = nullptr;
    for (auto& [row, sp] : span) {
        if (count[row] != sp.second - sp.first + 1) return false;  // row has a gap
        if (prev) {
            if (sp.first > prev->first || sp.second > prev->second) return false;
        }
        prev = &sp;
    }
    // rows must be consecutive or separated only where a skew shape allows an
    // empty row; an empty row forces everything above to be disjoint columns,
    // which the span conditions above do not capture, so require that rows
    // north of a gap lie strictly west of rows south of it
    int last_row = span.begin()->first;
    for (auto it = std::next(span.begin()); it != span.end(); ++it) {
        if (it->first != last_row + 1) {
            if (it->second.second >= std::prev(it)->second.first) return false;
        }
        last_row = it->first;
    }
    return true;
}

inline bool filling_is_lr(const std::map<Cell, int>& f) {
    std::set<Cell> cells;
    for (auto& [c, v] : f) {
        if (v <= 0) return false;
        cells.insert(c);
    }
    if (!cells_are_skew(cells)) return false;
    for (auto& [c, v] : f) {
        auto east = f.find({c.row, c.col + 1});
        if (east != f.end() && v > east->second) return false;
        auto north = f.find({c.row + 1, c.col});
        if (north != f.end() && north->second <= v) return false;
    }
    // reading word: north to south, west to east
    std::vector<int> w;
    std::map<int, std::vector<std::pair<int, int>>> rows;  // row -> (col, entry)
    for (auto& [c, v] : f) rows[c.row].push_back({c.col, v});
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
        std::sort(it->second.begin(), it->second.end());
        for (auto& [col, v] : it->second) w.push_back(v);
    }
    return is_lattice_word_tails(w);
}

// every LR filling of an arbitrary cell set
inline std::vector<std::map<Cell, int>> enumerate_lr_fillings(const std::set<Cell>& cells,
                                                              int max_entry) {
    std::vector<std::map<Cell, int>> out;
    if (!cells_are_skew(cells)) return out;
    // fill south to north, east to west so constraints check incrementally
    std::vector<Cell> order(cells.begin(), cells.end());
    std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.col > b.col;
    });
    std::map<Cell, int> f;
    std::vector<int> cnt(max_entry + 2, 0);
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            out.push_back(f);
            return;
        }
        Cell c = order[idx];
        int lo = 1, hi = max_entry;
        auto east = f.find({c.row, c.col + 1});
        if (east != f.end()) hi = std::min(hi, east->second);
        auto south = f.find({c.row - 1, c.col});
        if (south != f.end()) lo = std::max(lo, south->second + 1);
        for (int v = lo; v <= hi; ++v) {
            if (v >= 2 && cnt[v - 2] < cnt[v - 1] + 1) continue;
            f[c] = v;
            cnt[v - 1]++;
            rec(idx + 1);
            cnt[v - 1]--;
            f.erase(c);
        }
    };
    rec(0);
    return out;
}

}  // namespace detail

// cells of a flock's rhombi under its own orientation
inline std::map<Cell, int> flock_cells(const HexRegion& region, const Flock& F) {
    const Nest& x = region.nest[F.nest];
    std::map<Cell, int> out;
    for (const FlockRhombus& b : F.boxes) {
        auto s = slot_of(x, b.tile);
        if (!s) throw std::invalid_argument("flock rhombus is not in its nest");
        Cell c = cell_of_slot(x, F.orient, s->first, s->second);
        if (!out.emplace(c, b.entry).second)
            throw std::invalid_argument("two flock rhombi in one slot");
    }
    return out;
}

inline bool flock_is_valid(const HexRegion& region, const Flock& F) {
    try {
        return detail::filling_is_lr(flock_cells(region, F));
    } catch (const std::invalid_argument&) {
        return false;
    }
}

inline Partition flock_content(const Flock& F) {
    std::vector<int> cnt;
    for (const FlockRhombus& b : F.boxes) {
        if ((int)cnt.size() < b.entry) cnt.resize(b.entry, 0);
        cnt[b.entry - 1]++;
    }
    return Partition{std::move(cnt)};
}

// The unique flock on a set of packed rhombi under a given orientation.
inline Flock canonical_flock(const HexRegion& region, const Patch& tiles, int nest_idx,
                             const Orientation& orient) {
    const Nest& x = region.nest[nest_idx];
    auto occ = occupied_slots(tiles, x);
    std::set<Cell> cells;
    std::map<Cell, std::pair<int, int>> back;
    for (auto& [slot, idx] : occ) {
        Cell c = cell_of_slot(x, orient, slot.first, slot.second);
        cells.insert(c);
        back[c] = slot;
    }
    auto fillings = detail::enumerate_lr_fillings(cells, (int)cells.size() + 1);
    if (fillings.size() != 1)
        throw std::logic_error("packed nest does not have a unique flock filling");
    Flock F;
    F.nest = nest_idx;
    F.orient = orient;
    for (auto& [c, v] : fillings[0]) {
        auto slot = back[c];
        F.boxes.push_back({nest_slot(x, slot.first, slot.second), v});
    }
    return F;
}

// Accessibility: the flock's rhombi are the nest contents minus a straight
// diagram, so they can be peeled off by migration.
inline bool is_accessible(const HexRegion& region, const Patch& tiles, const Flock& F) {
    const Nest& x = region.nest[F.nest];
    auto occ = occupied_slots(tiles, x);
    std::set<std::pair<int, int>> rest;
    for (auto& [slot, idx] : occ) rest.insert(slot);
    for (const FlockRhombus& b : F.boxes) {
        auto s = slot_of(x, b.tile);
        if (!s || !rest.count(*s)) return false;
        rest.erase(*s);
    }
    return is_young(rest);
}

// ---- single-rhombus journeys ----

struct RotationEvent {
    std::vector<ExactPoint> hexagon;  // CCW outline of the rotated hexagon
    int rot = 0;                      // rotation in 30-degree steps: 6, 4 or 8
    std::array<Tile, 4> before, after;  // aligned: before[i] maps to after[i]
    Tile r_before, r_after;
};

struct Journey {
    Tile start, finish;
    int from_nest = -1, to_nest = -1;
    std::vector<RotationEvent> events;
};

namespace detail {

inline Quad4 frame_x(const ExactPoint& p, int dir_m) { return dot(p, unit_dir(dir_m)); }

inline Quad4 min_frame_x(const Tile& t, int dir_m) {
    Quad4 best = frame_x(t.verts[0], dir_m);
    for (size_t i = 1; i < t.verts.size(); i++) {
        Quad4 v = frame_x(t.verts[i], dir_m);
        if ((v - best).sign() < 0) best = v;
    }
    return best;
}

// boundary cycle of a small tile subset; empty result = not a simple hexagon
inline std::vector<ExactPoint> union_hexagon(const std::array<const Tile*, 4>& ts) {
    std::set<std::pair<ExactPoint, ExactPoint>> edges;
    for (const Tile* t : ts) {
        size_t m = t->verts.size();
        for (size_t i = 0; i < m; i++) {
            auto e = std::make_pair(t->verts[i], t->verts[(i + 1) % m]);
            if (!edges.insert(e).second) return {};  // duplicate directed edge: overlap
        }
    }
    std::map<ExactPoint, ExactPoint> nxt;
    for (auto& e : edges) {
        if (edges.count({e.second, e.first})) continue;  // interior edge
        if (!nxt.emplace(e.first, e.second).second) return {};  // pinched boundary
    }
    if (nxt.size() != 6) return {};
    std::vector<ExactPoint> cyc;
    ExactPoint cur = nxt.begin()->first;
    for (int i = 0; i < 6; i++) {
        cyc.push_back(cur);
        auto it = nxt.find(cur);
        if (it == nxt.end()) return {};
        cur = it->second;
    }
    if (!(cur == cyc[0])) return {};
    return cyc;
}

inline ExactPoint scale6(const ExactPoint& p) { return 6 * p; }

inline bool invariant_under(const std::vector<ExactPoint>& hex, int rot_k) {
    ExactPoint c6{};
    for (const ExactPoint& v : hex) c6 = c6 + v;
    std::set<ExactPoint> v6;
    for (const ExactPoint& v : hex) v6.insert(scale6(v));
    for (const ExactPoint& v : hex) {
        ExactPoint img = c6 + rotate30(scale6(v) - c6, rot_k);
        if (!v6.count(img)) return false;
    }
    return true;
}

inline ExactPoint rotate_about_c6(const ExactPoint& p, const ExactPoint& c6, int rot_k) {
    ExactPoint q = c6 + rotate30(scale6(p) - c6, rot_k);
    if (q.a % 6 || q.b % 6 || q.c % 6 || q.e % 6)
        throw std::logic_error("hexagon rotation left the half-integer lattice");
    return {q.a / 6, q.b / 6, q.c / 6, q.e / 6};
}

inline bool rhombus_axis_aligned(const Tile& r, int extra_rot, int dir_m) {
    size_t m = r.verts.size();
    for (size_t i = 0; i < m; i++) {
        int d = dir_of_unit(r.verts[(i + 1) % m] - r.verts[i]);
        int f = ((d + extra_rot - dir_m) % 12 + 12) % 12;
        if (f % 3 == 0) return true;  // horizontal or vertical in the frame
    }
    return false;
}

// Direction index of an arbitrary nonzero lattice vector (not necessarily
// of unit length).
inline int dir_of_vector(const ExactPoint& v) {
    for (int k = 0; k < 12; k++)
        if (cross(unit_dir(k), v).sign() == 0 && dot(unit_dir(k), v).sign() > 0) return k;
    throw std::logic_error("vector is not along a lattice direction");
}

// Does the ray from p in lattice direction `dir` immediately enter the
// interior of the (convex, CCW) hexagon outline?  p is assumed to lie inside
// or on the hexagon.
inline bool ray_enters_interior(const std::vector<ExactPoint>& hex, const ExactPoint& p,
                                int dir) {
    size_t m = hex.size();
    for (size_t i = 0; i < m; i++) {
        const ExactPoint& a = hex[i];
        const ExactPoint& b = hex[(i + 1) % m];
        if (p == a) {
            // interior wedge at this vertex sweeps CCW from the outgoing
            // edge to the reverse of the incoming edge
            int out = dir_of_vector(b - a);
            int in = dir_of_vector(a - hex[(i + m - 1) % m]);
            int span = ((in + 6 - out) % 12 + 12) % 12;
            int off = ((dir - out) % 12 + 12) % 12;
            return 0 < off && off < span;
        }
        // p in the relative interior of edge a->b: interior is strictly left
        ExactPoint e = b - a;
        if (cross(e, p - a).sign() == 0 && dot(p - a, e).sign() > 0 &&
            dot(b - p, e).sign() > 0)
            return cross(e, unit_dir(dir)).sign() > 0;
    }
    return true;  // p is interior to the hexagon
}

struct HexMatch {
    std::array<size_t, 4> idx;  // rhombus, then the three displaced tiles
    std::vector<ExactPoint> outline;
    int rot = 0;  // 6 for the 2-fold template, 4 or 8 for the 3-fold one
};

// All template hexagons containing rhombus `ri` that lie entirely weakly
// right (in the migration frame) of the rhombus's leftmost point.
inline std::vector<HexMatch> find_hexagons(const Patch& tiles, size_t ri, int dir_m) {
    const Tile& r = tiles[ri];
    Quad4 rmin = min_frame_x(r, dir_m);
    // candidates must stay near the rhombus: every template fits in a disk of
    // radius 3 around any of its points
    ExactPoint rc{};
    for (const ExactPoint& v : r.verts) rc = rc + v;
    ExactPoint r12 = 3 * rc;  // 12 * centroid of the rhombus
    std::vector<size_t> squares, tris;
    for (size_t i = 0; i < tiles.size(); i++) {
        if (i == ri || tiles[i].kind == TileKind::ThinRhombus) continue;
        ExactPoint tc{};
        for (const ExactPoint& v : tiles[i].verts) tc = tc + v;
        ExactPoint t12 = (tiles[i].verts.size() == 3 ? 4 : 3) * tc;  // 12 * centroid
        ExactPoint diff = t12 - r12;
        // both tiles of one template lie within distance 3 of each other's
        // centroid: |diff| <= 36, i.e. |diff|^2 <= 1296 (dot carries a /4)
        Quad4 d2 = dot(diff, diff);
        if (sign_quad(4 * 1296 - d2.p, -d2.q) < 0) continue;
        (tiles[i].kind == TileKind::Square ? squares : tris).push_back(i);
    }
    std::vector<HexMatch> out;
    for (size_t si : squares)
        for (size_t a = 0; a < tris.size(); a++)
            for (size_t b = a + 1; b < tris.size(); b++) {
                std::array<const Tile*, 4> ts = {&r, &tiles[si], &tiles[tris[a]], &tiles[tris[b]]};
                auto hex = union_hexagon(ts);
                if (hex.empty()) continue;
                // weakly right of the rhombus's leftmost point
                bool right = true;
                for (const ExactPoint& v : hex)
                    if ((frame_x(v, dir_m) - rmin).sign() < 0) { right = false; break; }
                if (!right) continue;
                // "looking to the right of the rhombus": the hexagon must
                // cover territory immediately to the right of a leftmost
                // point of the rhombus, not merely border on it
                bool covers_right = false;
                for (const ExactPoint& v : r.verts)
                    if ((frame_x(v, dir_m) - rmin).sign() == 0 &&
                        ray_enters_interior(hex, v, dir_m)) {
                        covers_right = true;
                        break;
                    }
                if (!covers_right) continue;
                HexMatch m;
                m.idx = {ri, si, tris[a], tris[b]};
                m.outline = hex;
                if (invariant_under(hex, 6)) {
                    m.rot = 6;
                } else if (invariant_under(hex, 4)) {
                    // pick the 120-degree rotation that leaves the rhombus
                    // with an axis-parallel edge in the frame
                    bool r4 = rhombus_axis_aligned(r, 4, dir_m);
                    bool r8 = rhombus_axis_aligned(r, 8, dir_m);
                    if (r4 == r8) throw std::logic_error("ambiguous 120-degree rotation choice");
                    m.rot = r4 ? 4 : 8;
                } else {
                    continue;
                }
                out.push_back(std::move(m));
            }
    return out;
}

}  // namespace detail

// Where (if anywhere) is this rhombus packed?  Returns the nest index if the
// rhombus is slot-aligned and the whole slot set of that nest is a Young
// diagram.
inline int packed_nest_of(const HexRegion& region, const Patch& tiles, const Tile& r) {
    for (int j = 0; j < 3; j++) {
        const Nest& x = region.nest[j];
        if (!slot_of(x, r)) continue;
        std::set<std::pair<int, int>> occ;
        for (auto& [slot, idx] : occupied_slots(tiles, x)) occ.insert(slot);
        return is_young(occ) ? j : -1;
    }
    return -1;
}

// Migrate a single rhombus (given by index into `tiles`) in frame direction
// `dir_m` until it is packed into a nest other than `src_nest`.  Mutates the
// patch and returns the journey.
inline Journey migrate_rhombus(Patch& tiles, const HexRegion& region, size_t ri, int dir_m,
                               int src_nest) {
    Journey j;
    j.start = tiles[ri];
    j.from_nest = src_nest;
    size_t guard = 12 * tiles.size() + 24;
    for (size_t step = 0;; step++) {
        int at = packed_nest_of(region, tiles, tiles[ri]);
        if (at >= 0 && at != src_nest) {
            j.finish = tiles[ri];
            j.to_nest = at;
            return j;
        }
        if (step >= guard) throw std::logic_error("rhombus journey did not terminate");
        auto matches = detail::find_hexagons(tiles, ri, dir_m);
        if (matches.size() != 1)
            throw std::logic_error("minimal migration hexagon is not unique (found " +
                                   std::to_string(matches.size()) + ")");
        const detail::HexMatch& m = matches[0];
        ExactPoint c6{};
        for (const ExactPoint& v : m.outline) c6 = c6 + v;
        RotationEvent ev;
        ev.hexagon = m.outline;
        ev.rot = m.rot;
        for (int k = 0; k < 4; k++) {
            const Tile& t = tiles[m.idx[k]];
            ev.before[k] = t;
            std::vector<ExactPoint> vs;
            for (const ExactPoint& v : t.verts)
                vs.push_back(detail::rotate_about_c6(v, c6, m.rot));
            ev.after[k] = make_tile(std::move(vs));
        }
        ev.r_before = tiles[ri];
        ev.r_after = ev.after[0];
        for (int k = 0; k < 4; k++) tiles[m.idx[k]] = ev.after[k];
        j.events.push_back(std::move(ev));
    }
}

// ---- flock migration ----

struct MigrationResult {
    Flock flock;  // the migrated flock, with its induced orientation
    std::vector<Journey> journeys;  // in processing order
};

inline MigrationResult migrate_flock(Patch& tiles, const HexRegion& region, const Flock& F,
                                     Compass dir) {
    const Nest& src = region.nest[F.nest];
    // compass consistency: a nest opening to the northeast under the flock's
    // orientation is only left by going north or east; the southwest case is
    // the reverse
    bool opens_ne = (std::set<int>{F.orient.dirE, F.orient.dirN} ==
                     std::set<int>{src.dirE, src.dirN});
    bool forward = dir == Compass::North || dir == Compass::East;
    if (opens_ne != forward)
        throw std::invalid_argument("migration direction inconsistent with flock orientation");
    int dir_m = compass_dir(F.orient, dir);

    // standard order: by entry, ties west to east; north/east migration
    // processes the largest box first, south/west the smallest
    struct Item {
        FlockRhombus box;
        int col = 0;
    };
    std::vector<Item> items;
    for (const FlockRhombus& b : F.boxes) {
        auto s = slot_of(src, b.tile);
        if (!s) throw std::invalid_argument("flock rhombus not in source nest");
        items.push_back({b, cell_of_slot(src, F.orient, s->first, s->second).col});
    }
    std::sort(items.begin(), items.end(), [&](const Item& a, const Item& b) {
        if (a.box.entry != b.box.entry) return forward ? a.box.entry > b.box.entry
                                                       : a.box.entry < b.box.entry;
        return forward ? a.col > b.col : a.col < b.col;
    });

    MigrationResult res;
    int landed = -1;
    for (Item& it : items) {
        size_t ri = tiles.size();
        for (size_t i = 0; i < tiles.size(); i++)
            if (tiles[i] == it.box.tile) { ri = i; break; }
        if (ri == tiles.size()) throw std::invalid_argument("flock rhombus not found in mosaic");
        Journey j = migrate_rhombus(tiles, region, ri, dir_m, F.nest);
        if (landed < 0) landed = j.to_nest;
        else if (landed != j.to_nest)
            throw std::logic_error("flock rhombi landed in different nests");
        res.flock.boxes.push_back({tiles[ri], it.box.entry});
        res.journeys.push_back(std::move(j));
    }
    if (landed < 0) landed = F.nest;  // empty flock: nothing moved
    res.flock.nest = landed;

    // induced orientation: the rotation of (E,N) by at most 60 degrees that
    // is an orientation of the landing nest
    auto valid = nest_orientations(region.nest[landed]);
    int found = 0;
    for (int k = -2; k <= 2; k++) {
        Orientation cand{((F.orient.dirE + k) % 12 + 12) % 12,
                         ((F.orient.dirN + k) % 12 + 12) % 12};
        for (const Orientation& v : valid)
            if (cand == v) {
                res.flock.orient = cand;
                found++;
            }
    }
    if (found != 1) throw std::logic_error("induced orientation is not unique");
    return res;
}

// Direction that undoes a migration: if the orientation was not rotated,
// north/south and east/west are mutually inverse; if it was, north/west and
// east/south are.
inline Compass inverse_compass(const Orientation& before, const Orientation& after, Compass dir) {
    if (after.dirE == before.dirE) {
        switch (dir) {
            case Compass::North: return Compass::South;
            case Compass::South: return Compass::North;
            case Compass::East: return Compass::West;
            default: return Compass::East;
        }
    }
    switch (dir) {
        case Compass::North: return Compass::West;
        case Compass::West: return Compass::North;
        case Compass::East: return Compass::South;
        default: return Compass::East;
    }
}

// ---- wake diagnostics ----

struct Wake {
    Patch upper, lower;
    std::vector<ExactPoint> midline;  // polyline from the journey's start to its finish
};

// tiles (in their pre-move positions) that a journey causes to move
inline std::set<Tile> journey_touched(const Journey& j) {
    std::set<Tile> out;
    for (const RotationEvent& ev : j.events)
        for (int k = 1; k < 4; k++)  // index 0 is the travelling rhombus
            if (!(ev.before[k] == ev.after[k])) out.insert(ev.before[k]);
    return out;
}

namespace detail {

inline bool tiles_share_edge(const Tile& a, const Tile& b,
                             std::pair<ExactPoint, ExactPoint>* shared = nullptr) {
    size_t ma = a.verts.size(), mb = b.verts.size();
    for (size_t i = 0; i < ma; i++)
        for (size_t k = 0; k < mb; k++)
            if (a.verts[i] == b.verts[(k + 1) % mb] && a.verts[(i + 1) % ma] == b.verts[k]) {
                if (shared) *shared = {a.verts[i], a.verts[(i + 1) % ma]};
                return true;
            }
    return false;
}

inline bool is_chain(const Patch& part) {
    if (part.empty()) return false;
    size_t n = part.size();
    std::vector<int> deg(n, 0);
    int edges = 0;
    for (size_t i = 0; i < n; i++)
        for (size_t k = i + 1; k < n; k++)
            if (tiles_share_edge(part[i], part[k])) {
                deg[i]++;
                deg[k]++;
                edges++;
            }
    if (edges != (int)n - 1) return false;  // path graph: tree with max degree 2
    for (int d : deg)
        if (d > 2) return false;
    // connectivity: a tree on n vertices has exactly n-1 edges, so edge count
    // plus acyclicity would suffice; check connectivity directly instead
    std::vector<char> seen(n, 0);
    std::vector<size_t> stack = {0};
    seen[0] = 1;
    size_t cnt = 1;
    while (!stack.empty()) {
        size_t i = stack.back();
        stack.pop_back();
        for (size_t k = 0; k < n; k++)
            if (!seen[k] && tiles_share_edge(part[i], part[k])) {
                seen[k] = 1;
                cnt++;
                stack.push_back(k);
            }
    }
    return cnt == n;
}

inline Quad4 centroid4_y(const Tile& t, int dir_m) {
    // frame y of (a multiple of) the centroid; only used for comparisons
    // between tiles with the same vertex count
    ExactPoint s{};
    for (const ExactPoint& v : t.verts) s = s + v;
    if (t.verts.size() == 3) s = s + s + s + s;  // scale triangles (3 verts) by 4
    else s = s + s + s;                          // and quads by 3, giving 12x centroid
    return dot(s, unit_dir((dir_m + 3) % 12));
}

}  // namespace detail

// All ways to split the displaced tiles of a journey into an upper and a
// lower wake, one-tile-wide edge-connected chains divided by a midline that
// runs from the rhombus's initial position to its final one.  Straight
// stretches of a wake occasionally admit more than one such division.
inline std::vector<Wake> wake_splits(const Journey& j, int dir_m) {
    if (j.events.empty()) return {};
    // replay the journey to find the final positions of all displaced tiles
    std::set<Tile> current;  // current positions of displaced tiles
    for (const RotationEvent& ev : j.events)
        for (int k = 1; k < 4; k++) {
            if (ev.before[k] == ev.after[k]) continue;
            current.erase(ev.before[k]);
            current.insert(ev.after[k]);
        }
    Patch wake(current.begin(), current.end());

    // try every split into two edge-connected one-tile-wide chains whose
    // interface is a single polyline, upper chain above
    std::vector<Wake> valid;
    size_t n = wake.size();
    for (size_t mask = 1; mask + 1 < (size_t(1) << n); mask++) {
        Patch up, lo;
        for (size_t i = 0; i < n; i++) (mask >> i & 1 ? up : lo).push_back(wake[i]);
        if (!detail::is_chain(up) || !detail::is_chain(lo)) continue;
        // interface edges
        std::vector<std::pair<ExactPoint, ExactPoint>> mid;
        bool upper_above = true;
        for (const Tile& a : up)
            for (const Tile& b : lo) {
                std::pair<ExactPoint, ExactPoint> e;
                if (detail::tiles_share_edge(a, b, &e)) {
                    mid.push_back(e);
                    // no upper tile may sit strictly below its lower neighbor
                    if ((detail::centroid4_y(a, dir_m) - detail::centroid4_y(b, dir_m)).sign() < 0)
                        upper_above = false;
                }
            }
        if (mid.empty() || !upper_above) continue;
        // the interface must be a single simple path
        std::map<ExactPoint, std::vector<ExactPoint>> adj;
        for (auto& e : mid) {
            adj[e.first].push_back(e.second);
            adj[e.second].push_back(e.first);
        }
        int odd = 0;
        bool simple = true;
        ExactPoint end{};
        for (auto& [p, nb] : adj) {
            if (nb.size() > 2) simple = false;
            if (nb.size() == 1) {
                odd++;
                end = p;
            }
        }
        if (!simple || odd != 2 || adj.size() != mid.size() + 1) continue;
        // walk the path from one endpoint
        std::vector<ExactPoint> line = {end};
        ExactPoint prev = end, cur = adj[end][0];
        while (true) {
            line.push_back(cur);
            auto& nb = adj[cur];
            if (nb.size() == 1) break;
            ExactPoint nxt = (nb[0] == prev) ? nb[1] : nb[0];
            prev = cur;
            cur = nxt;
        }
        if (line.size() != mid.size() + 1) continue;
        // the midline runs the length of the wake: it starts on the
        // rhombus's initial position and ends on its final one
        auto on = [](const Tile& t, const ExactPoint& p) {
            return std::find(t.verts.begin(), t.verts.end(), p) != t.verts.end();
        };
        if (!on(j.start, line.front())) std::reverse(line.begin(), line.end());
        if (!on(j.start, line.front()) || !on(j.finish, line.back())) continue;
        Wake cand;
        cand.upper = up;
        cand.lower = lo;
        cand.midline = line;
        valid.push_back(std::move(cand));
    }
    return valid;
}

// Sign of p relative to the midline, oriented from start to finish: +1 to
// the left of travel, -1 to the right, 0 on the line or beyond its ends.
// Only segments whose perpendicular strip contains p give a verdict, so a
// point past the far end of the midline is not on either side.
inline int midline_side(const std::vector<ExactPoint>& midline, const ExactPoint& p) {
    for (size_t i = 0; i + 1 < midline.size(); i++) {
        ExactPoint e = midline[i + 1] - midline[i];
        ExactPoint d = p - midline[i];
        if (dot(d, e).sign() < 0 || dot(midline[i + 1] - p, e).sign() < 0) continue;
        int s = cross(e, d).sign();
        if (s != 0) return s;
    }
    return 0;
}

}  // namespace lrm
