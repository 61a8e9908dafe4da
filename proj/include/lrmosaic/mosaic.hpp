#pragma once
#include <array>
#include <map>
#include <queue>
#include <stdexcept>
#include "puzzle.hpp"
#include "region.hpp"

namespace lrm {

// A mosaic: a tiling of the Gr(d,n) hexagon by unit triangles, unit squares
// and thin rhombi such that every thin rhombus sits in a nest slot and each
// nest's rhombi form a Young diagram.  Mosaics correspond to puzzles by
// "straightening": keep 0-labeled edges, rotate 1-labeled edges by -30
// degrees; squares come from puzzle rhombi and the nest rhombi fill the
// three corner gaps.
struct Mosaic {
    BoxParams box;
    Patch tiles;
};

namespace detail {

// image of every puzzle lattice vertex under the straightening map
inline std::map<std::pair<int, int>, ExactPoint> straighten_vertices(const Puzzle& p) {
    int n = p.n;
    std::map<std::pair<int, int>, ExactPoint> pos;
    pos[{0, 0}] = ExactPoint{};
    // edge list: (r,j)->(r,j+1) dir 0 label hor; (r,j)->(r+1,j) dir 2 label pp;
    // (r,j+1)->(r+1,j) dir 4 label qq.  Label 1 rotates the edge -30 degrees.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int r = 0; r < n; r++)
            for (int j = 0; j < n - r; j++) {
                struct E { int r1, j1, r2, j2, dir, lab; };
                const E es[3] = {
                    {r, j, r, j + 1, 0, p.hor[r][j]},
                    {r, j, r + 1, j, 2, p.pp[r][j]},
                    {r, j + 1, r + 1, j, 4, p.qq[r][j]},
                };
                for (const E& e : es) {
                    if (e.lab != 0 && e.lab != 1) continue;  // hidden rhombus diagonal
                    ExactPoint step = unit_dir((e.dir - e.lab + 12) % 12);
                    auto i1 = pos.find({e.r1, e.j1}), i2 = pos.find({e.r2, e.j2});
                    if (i1 != pos.end() && i2 == pos.end()) {
                        pos[{e.r2, e.j2}] = i1->second + step;
                        changed = true;
                    } else if (i1 == pos.end() && i2 != pos.end()) {
                        pos[{e.r1, e.j1}] = i2->second - step;
                        changed = true;
                    } else if (i1 != pos.end() && i2 != pos.end()) {
                        if (!(i2->second == i1->second + step))
                            throw std::logic_error("straightening: edge cycle fails to close");
                    }
                }
            }
    }
    if ((int)pos.size() != (n + 1) * (n + 2) / 2)
        throw std::logic_error("straightening: puzzle graph not connected");
    return pos;
}

// Read a nest's Young diagram (east-row lengths) off the staircase, the image
// of one puzzle side.  `stair` runs from corner+d*E to corner+(n-d)*N.
inline std::vector<int> diagram_of_staircase(const Nest& nest, const BoxParams& box,
                                             const std::vector<ExactPoint>& stair) {
    std::vector<int> D;
    int px = box.d, py = 0;
    auto c0 = nest_coords(nest, stair.front());
    if (!c0 || c0->first != box.d || c0->second != 0)
        throw std::logic_error("staircase does not start at the east corner");
    for (size_t i = 1; i < stair.size(); i++) {
        auto c = nest_coords(nest, stair[i]);
        if (!c) throw std::logic_error("staircase vertex off the nest grid");
        auto [x, y] = *c;
        if (x == px - 1 && y == py) {          // west step
            px = x;
        } else if (x == px && y == py + 1) {   // north step
            D.push_back(px);
            py = y;
        } else {
            throw std::logic_error("staircase step is neither west nor north");
        }
    }
    if (px != 0 || py != box.cols())
        throw std::logic_error("staircase does not end at the north corner");
    for (size_t t = 1; t < D.size(); t++)
        if (D[t] > D[t - 1]) throw std::logic_error("staircase not monotone");
    return D;  // D[t] = number of slots in row t (along E), t along N
}

}  // namespace detail

inline Mosaic mosaic_from_puzzle(const Puzzle& p) {
    int n = p.n;
    int d = 0;
    for (int r = 0; r < n; r++) d += p.left(r);
    BoxParams box{d, n};
    HexRegion region = build_hex_region(box);
    auto pos = detail::straighten_vertices(p);
    auto P = [&](int r, int j) { return pos.at({r, j}); };

    Mosaic m;
    m.box = box;
    for (const PuzzlePiece& pc : p.pieces) {
        int r = pc.r, j = pc.j;
        std::vector<ExactPoint> v;
        switch (pc.kind) {
            case PieceKind::Tri0Up:
            case PieceKind::Tri1Up: v = {P(r, j), P(r, j + 1), P(r + 1, j)}; break;
            case PieceKind::Tri0Down:
            case PieceKind::Tri1Down: v = {P(r, j + 1), P(r + 1, j + 1), P(r + 1, j)}; break;
            case PieceKind::RhombA: v = {P(r, j), P(r, j + 1), P(r + 1, j + 1), P(r + 1, j)}; break;
            case PieceKind::RhombB: v = {P(r, j + 1), P(r + 1, j + 1), P(r + 2, j), P(r + 1, j)}; break;
            case PieceKind::RhombC: v = {P(r, j + 1), P(r, j + 2), P(r + 1, j + 1), P(r + 1, j)}; break;
        }
        m.tiles.push_back(make_tile(v));
    }

    // fill the nest gaps with thin rhombi; the staircases are the images of
    // the three puzzle sides, each walked from the nest's east corner
    std::array<std::vector<ExactPoint>, 3> stair;
    for (int r = n; r >= 0; r--) stair[0].push_back(P(r, 0));        // left side, apex down
    for (int r = 0; r <= n; r++) stair[1].push_back(P(r, n - r));    // right side, from lower-right
    for (int j = 0; j <= n; j++) stair[2].push_back(P(0, j));        // bottom, left to right
    for (int k = 0; k < 3; k++) {
        auto D = detail::diagram_of_staircase(region.nest[k], box, stair[k]);
        for (int t = 0; t < (int)D.size(); t++)
            for (int u = 0; u < D[t]; u++)
                m.tiles.push_back(nest_slot(region.nest[k], u, t));
    }

    validate_patch_tiling(m.tiles, region.poly);
    return m;
}

// Boundary partitions (nu_A, nu_B, nu_C) of a mosaic: each nest's rhombi form
// the transposed diagram of its partition, rows running along E.
inline std::array<Partition, 3> mosaic_boundary(const Mosaic& m) {
    HexRegion region = build_hex_region(m.box);
    std::array<std::vector<int>, 3> rows;  // rows[k][t] = cells in row t of nest k
    for (const Tile& t : m.tiles) {
        if (t.kind != TileKind::ThinRhombus) continue;
        bool placed = false;
        for (int k = 0; k < 3 && !placed; k++) {
            const Nest& nx = region.nest[k];
            // the slot is identified by its minimal nest coordinates
            int bu = -1, bt = -1;
            bool ok = true;
            for (const ExactPoint& v : t.verts) {
                auto c = nest_coords(nx, v);
                if (!c || c->first < 0 || c->second < 0) { ok = false; break; }
            }
            if (!ok) continue;
            auto c0 = nest_coords(nx, t.verts[0]);
            bu = c0->first; bt = c0->second;
            for (const ExactPoint& v : t.verts) {
                auto c = *nest_coords(nx, v);
                bu = std::min(bu, c.first);
                bt = std::min(bt, c.second);
            }
            if (!(nest_slot(nx, bu, bt) == t)) continue;
            auto& R = rows[k];
            if ((int)R.size() <= bt) R.resize(bt + 1, 0);
            R[bt]++;
            placed = true;
        }
        if (!placed) throw std::logic_error("thin rhombus not aligned to any nest slot");
    }
    std::array<Partition, 3> out;
    for (int k = 0; k < 3; k++) {
        // rows[k] counts cells per row; cells must be left-justified and the
        // row lengths weakly decreasing (checked by Partition) -- left
        // justification is implied because the slot multiset determines only
        // counts; verify by reconstructing the slots
        std::vector<int> D = rows[k];
        Partition transposed(D);
        for (int t = 0; t < (int)D.size(); t++)
            for (int u = 0; u < D[t]; u++) {
                Tile s = nest_slot(region.nest[k], u, t);
                bool found = false;
                for (const Tile& tt : m.tiles)
                    if (tt == s) { found = true; break; }
                if (!found) throw std::logic_error("nest rhombi do not form a Young diagram");
            }
        out[k] = transposed.conjugate();
    }
    return out;
}

// Inverse of straightening: rebuild the puzzle from a mosaic.  Edge labels
// are recovered from direction parity (odd multiples of 30 degrees are the
// rotated, 1-labeled edges).
inline Puzzle puzzle_of_mosaic(const Mosaic& m) {
    int n = m.box.n;
    HexRegion region = build_hex_region(m.box);

    // adjacency via triangle/square edges (nest rhombi are not puzzle pieces)
    std::map<ExactPoint, std::vector<std::pair<ExactPoint, int>>> adj;  // point -> (nbr, dir)
    for (const Tile& t : m.tiles) {
        if (t.kind == TileKind::ThinRhombus) continue;
        size_t sz = t.verts.size();
        for (size_t i = 0; i < sz; i++) {
            ExactPoint a = t.verts[i], b = t.verts[(i + 1) % sz];
            int dir = dir_of_unit(b - a);
            adj[a].push_back({b, dir});
            adj[b].push_back({a, (dir + 6) % 12});
        }
    }

    // assign lattice coordinates by BFS from the lower-left corner image
    std::map<ExactPoint, std::pair<int, int>> lat;
    std::queue<ExactPoint> q;
    lat[region.primed[0]] = {0, 0};
    q.push(region.primed[0]);
    auto lattice_step = [](std::pair<int, int> rj, int pdir) -> std::pair<int, int> {
        auto [r, j] = rj;
        switch (pdir) {
            case 0: return {r, j + 1};
            case 2: return {r + 1, j};
            case 4: return {r + 1, j - 1};
            case 6: return {r, j - 1};
            case 8: return {r - 1, j};
            case 10: return {r - 1, j + 1};
        }
        throw std::logic_error("mosaic edge direction does not come from the lattice");
    };
    while (!q.empty()) {
        ExactPoint v = q.front();
        q.pop();
        auto rj = lat.at(v);
        for (auto& [w, dir] : adj[v]) {
            int pdir = (dir % 2) ? (dir + 1) % 12 : dir;  // un-rotate 1-labeled edges
            auto rj2 = lattice_step(rj, pdir);
            auto it = lat.find(w);
            if (it == lat.end()) {
                lat[w] = rj2;
                q.push(w);
            } else if (it->second != rj2) {
                throw std::logic_error("mosaic does not unfold to a consistent puzzle lattice");
            }
        }
    }

    Puzzle p;
    p.n = n;
    p.hor.resize(n); p.pp.resize(n); p.qq.resize(n);
    for (int r = 0; r < n; r++) {
        p.hor[r].assign(n - r, -1);
        p.pp[r].assign(n - r, -1);
        p.qq[r].assign(n - r, -1);
    }
    auto set_label = [&](std::vector<std::vector<int>>& a, int r, int j, int v) {
        if (r < 0 || r >= n || j < 0 || j >= (int)a[r].size())
            throw std::logic_error("puzzle edge out of range");
        if (a[r][j] != -1 && a[r][j] != v)
            throw std::logic_error("conflicting puzzle edge labels");
        a[r][j] = v;
    };
    // identify each tile as a puzzle piece from the lattice coordinates of
    // its vertices (smallest vertex in row-major order anchors the piece)
    for (const Tile& t : m.tiles) {
        if (t.kind == TileKind::ThinRhombus) continue;
        std::vector<std::pair<int, int>> vs;
        for (auto& v : t.verts) {
            auto it = lat.find(v);
            if (it == lat.end()) throw std::logic_error("tile vertex missing from lattice");
            vs.push_back(it->second);
        }
        std::sort(vs.begin(), vs.end());
        auto [r, j] = vs[0];
        if (t.kind == TileKind::Triangle) {
            int lab = dir_of_unit(t.verts[1] - t.verts[0]) % 2;
            bool up = vs[1] == std::make_pair(r, j + 1) && vs[2] == std::make_pair(r + 1, j) &&
                      vs.size() == 3;
            bool down = vs[1] == std::make_pair(r + 1, j - 1) && vs[2] == std::make_pair(r + 1, j);
            if (up) {
                set_label(p.hor, r, j, lab);
                set_label(p.pp, r, j, lab);
                set_label(p.qq, r, j, lab);
                p.pieces.push_back({lab ? PieceKind::Tri1Up : PieceKind::Tri0Up, r, j});
            } else if (down) {
                // vertices (r,j), (r+1,j-1), (r+1,j) correspond to d(r,j-1)
                set_label(p.qq, r, j - 1, lab);
                set_label(p.pp, r, j, lab);
                set_label(p.hor, r + 1, j - 1, lab);
                p.pieces.push_back({lab ? PieceKind::Tri1Down : PieceKind::Tri0Down, r, j - 1});
            } else {
                throw std::logic_error("triangle does not match a lattice cell");
            }
        } else {  // square -> puzzle rhombus
            std::sort(vs.begin(), vs.end());
            if (vs == std::vector<std::pair<int, int>>{{r, j}, {r, j + 1}, {r + 1, j}, {r + 1, j + 1}}) {
                set_label(p.hor, r, j, 1);
                set_label(p.hor, r + 1, j, 1);
                set_label(p.pp, r, j, 0);
                set_label(p.pp, r, j + 1, 0);
                set_label(p.qq, r, j, 2);
                p.pieces.push_back({PieceKind::RhombA, r, j});
            } else if (vs == std::vector<std::pair<int, int>>{{r, j}, {r + 1, j - 1}, {r + 1, j}, {r + 2, j - 1}}) {
                // d(r,j-1) + u(r+1,j-1)
                set_label(p.qq, r, j - 1, 0);
                set_label(p.qq, r + 1, j - 1, 0);
                set_label(p.pp, r, j, 1);
                set_label(p.pp, r + 1, j - 1, 1);
                set_label(p.hor, r + 1, j - 1, 2);
                p.pieces.push_back({PieceKind::RhombB, r, j - 1});
            } else if (vs == std::vector<std::pair<int, int>>{{r, j}, {r, j + 1}, {r + 1, j - 1}, {r + 1, j}}) {
                // d(r,j-1) + u(r,j)
                set_label(p.qq, r, j - 1, 1);
                set_label(p.qq, r, j, 1);
                set_label(p.hor, r + 1, j - 1, 0);
                set_label(p.hor, r, j, 0);
                set_label(p.pp, r, j, 2);
                p.pieces.push_back({PieceKind::RhombC, r, j - 1});
            } else {
                throw std::logic_error("square does not match a lattice rhombus");
            }
        }
    }
    for (int r = 0; r < n; r++)
        for (int j = 0; j < n - r; j++)
            if (p.hor[r][j] == -1 || p.pp[r][j] == -1 || p.qq[r][j] == -1)
                throw std::logic_error("mosaic does not cover the whole puzzle");
    return p;
}

inline void enumerate_mosaics(const std::string& pi, const std::string& rho,
                              const std::string& sigma,
                              const std::function<void(const Mosaic&)>& out) {
    enumerate_puzzles(pi, rho, sigma,
                      [&](const Puzzle& p) { out(mosaic_from_puzzle(p)); });
}

}  // namespace lrm
