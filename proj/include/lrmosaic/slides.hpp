#pragma once
// Schutzenberger slides (jeu de taquin) on skew semistandard tableaux, in
// the same French convention as tableau.hpp: rows grow northwards, rows
// weakly increase west to east, columns strictly increase south to north.

#include <map>
#include <stdexcept>
#include <vector>

#include "tableau.hpp"

namespace lrm {

namespace detail {

inline std::map<Cell, int> tableau_cells(const LRTableau& t) {
    std::map<Cell, int> m;
    for (int r = 0; r < t.shape.outer.size(); r++)
        for (int c = t.shape.inner.part(r); c < t.shape.outer.part(r); c++)
            m[{r, c}] = t.entry(r, c);
    return m;
}

// Build an LRTableau of the given shape from a cell map; the occupied cells
// must be exactly the cells of the shape.
inline LRTableau tableau_from_cells(SkewShape sh, const std::map<Cell, int>& m) {
    if ((long long)m.size() != sh.cell_count())
        throw std::invalid_argument("cell map does not match shape");
    LRTableau t{std::move(sh)};
    for (auto& [c, v] : m) {
        if (!t.shape.has_cell(c.row, c.col))
            throw std::invalid_argument("cell map does not match shape");
        t.entry_ref(c.row, c.col) = v;
    }
    return t;
}

// The partition with one box added at / removed from the given cell.
inline Partition with_cell(const Partition& p, Cell c, int delta) {
    std::vector<int> parts;
    int n = std::max(p.size(), c.row + 1);
    for (int r = 0; r < n; r++) parts.push_back(p.part(r));
    parts[c.row] += delta;
    return Partition{std::move(parts)};  // throws if no longer a partition
}

}  // namespace detail

// Inner corners of a skew shape: cells of the inner diagram whose removal
// leaves a diagram, i.e. where a forward slide may start.
inline std::vector<Cell> inner_corners(const SkewShape& sh) {
    std::vector<Cell> out;
    for (int r = 0; r < sh.inner.size(); r++) {
        int c = sh.inner.part(r) - 1;
        if (c < 0) continue;
        if (r + 1 < sh.inner.size() && sh.inner.part(r + 1) > c) continue;
        if (c < sh.outer.part(r)) out.push_back({r, c});
    }
    return out;
}

// Cells addable to the outer diagram, where a reverse slide may start.
inline std::vector<Cell> outer_corners(const SkewShape& sh) {
    std::vector<Cell> out;
    for (int r = 0; r <= sh.outer.size(); r++) {
        int c = r < sh.outer.size() ? sh.outer.part(r) : 0;
        if (r > 0 && sh.outer.part(r - 1) <= c) continue;
        out.push_back({r, c});
    }
    return out;
}

// One forward Schutzenberger slide into the given inner corner.  The hole
// travels northeast-ward (each step the west-most admissible neighbor moves
// into it) and leaves through the outer boundary.  If vacated is non-null it
// receives the cell where the hole left the shape.
inline LRTableau schuetzenberger_slide_forward(const LRTableau& t, Cell corner,
                                               Cell* vacated = nullptr) {
    auto cells = detail::tableau_cells(t);
    {
        auto ic = inner_corners(t.shape);
        if (std::find(ic.begin(), ic.end(), corner) == ic.end())
            throw std::invalid_argument("not an inner corner of the shape");
    }
    Cell hole = corner;
    for (;;) {
        auto north = cells.find({hole.row + 1, hole.col});
        auto east = cells.find({hole.row, hole.col + 1});
        if (north == cells.end() && east == cells.end()) break;
        // move east when strictly smaller than north; ties move north so the
        // column stays strict
        bool move_east =
            north == cells.end() || (east != cells.end() && east->second < north->second);
        auto it = move_east ? east : north;
        Cell from = it->first;
        cells[hole] = it->second;
        cells.erase(it);
        hole = from;
    }
    if (vacated) *vacated = hole;
    SkewShape sh(detail::with_cell(t.shape.outer, hole, -1),
                 detail::with_cell(t.shape.inner, corner, -1));
    return detail::tableau_from_cells(std::move(sh), cells);
}

// One reverse Schutzenberger slide starting from the given addable outer
// cell.  The hole travels southwest-ward (each step the larger of the south
// and west neighbors moves into it) and comes to rest against the inner
// boundary.  If vacated is non-null it receives the cell where the hole
// stopped (the new inner cell).
inline LRTableau schuetzenberger_slide_reverse(const LRTableau& t, Cell corner,
                                               Cell* vacated = nullptr) {
    auto cells = detail::tableau_cells(t);
    {
        auto oc = outer_corners(t.shape);
        if (std::find(oc.begin(), oc.end(), corner) == oc.end())
            throw std::invalid_argument("not an addable outer cell of the shape");
    }
    Cell hole = corner;
    for (;;) {
        auto south = cells.find({hole.row - 1, hole.col});
        auto west = cells.find({hole.row, hole.col - 1});
        if (south == cells.end() && west == cells.end()) break;
        // move west when strictly larger than south; ties move south so the
        // column stays strict
        bool move_west =
            south == cells.end() || (west != cells.end() && west->second > south->second);
        auto it = move_west ? west : south;
        Cell from = it->first;
        cells[hole] = it->second;
        cells.erase(it);
        hole = from;
    }
    if (vacated) *vacated = hole;
    SkewShape sh(detail::with_cell(t.shape.outer, corner, +1),
                 detail::with_cell(t.shape.inner, hole, +1));
    return detail::tableau_from_cells(std::move(sh), cells);
}

// Rectification: forward slides until the shape is straight.  For LR
// tableaux the result is the superstandard tableau of the content.
inline LRTableau rectify(LRTableau t) {
    for (;;) {
        auto ic = inner_corners(t.shape);
        if (ic.empty()) break;
        t = schuetzenberger_slide_forward(t, ic.front());
    }
    return t;
}

// The straight LR tableau of shape (and content) lambda: row r holds r+1.
inline LRTableau superstandard(const Partition& lambda) {
    LRTableau t{SkewShape(lambda, Partition{})};
    for (int r = 0; r < lambda.size(); r++)
        for (int c = 0; c < lambda.part(r); c++) t.entry_ref(r, c) = r + 1;
    return t;
}

// The rotation transform on LR tableaux inside a d x (n-d) box.  Replace
// each box of f by its position in the reverse of the standard order and
// rotate the result 180 degrees within the box; this gives a standard skew
// tableau f~ whose shape is the box-rotation of f's shape.  Then grow the
// superstandard tableau g on inner(f~) by reverse slides: the j-th slide
// starts at the cell of f~ labelled j.  The result g~ has
//   outer  = complement of inner(f),
//   content = complement of outer(f),
//   inner  = content(f),
// so the boundary data cycles under this transform with period three.
inline LRTableau rotate_transform_tableau(const LRTableau& f, const BoxParams& box) {
    auto rot = [&](Cell c) { return Cell{box.d - 1 - c.row, box.cols() - 1 - c.col}; };
    std::vector<Cell> ord = standard_order(f);
    LRTableau g = superstandard(f.shape.outer.complement(box));
    // label j (1-based) sits at the rotation of the j-th-from-last cell in
    // the standard order; slide at those cells in label order
    for (size_t j = 0; j < ord.size(); j++)
        g = schuetzenberger_slide_reverse(g, rot(ord[ord.size() - 1 - j]));
    return g;
}

}  // namespace lrm
