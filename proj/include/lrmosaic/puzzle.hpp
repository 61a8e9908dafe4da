#pragma once
#include <vector>
#include <string>
#include <functional>
#include <stdexcept>
#include "partition.hpp"

namespace lrm {

// Triangular puzzle board of size n, rows counted from the bottom.
// Row r holds upward cells u(r,j), j = 0..n-1-r, and downward cells
// d(r,j), j = 0..n-2-r.  Edge labels live in three arrays:
//   hor[r][j] : horizontal edge under u(r,j)   (= top edge of d(r-1,j))
//   pp[r][j]  : "/" edge left of u(r,j)        (= right edge of d(r,j-1))
//   qq[r][j]  : "\" edge right of u(r,j)       (= left edge of d(r,j))
// Values: -1 unassigned, 0/1 labels, 2 marks a diagonal hidden inside a
// rhombus piece (not a real puzzle edge).

enum class PieceKind {
    Tri0Up, Tri1Up, Tri0Down, Tri1Down,
    RhombA,  // u(r,j) + d(r,j):   horizontals 1, "/" sides 0
    RhombB,  // d(r,j) + u(r+1,j): "/" sides 1, "\" sides 0
    RhombC,  // d(r,j) + u(r,j+1): "\" sides 1, horizontals 0
};

struct PuzzlePiece {
    PieceKind kind;
    int r, j;  // anchor cell (the up cell for triangles/RhombA, the down cell otherwise)
};

struct Puzzle {
    int n = 0;
    std::vector<std::vector<int>> hor, pp, qq;
    std::vector<PuzzlePiece> pieces;

    int left(int r) const { return pp[r][0]; }                  // read bottom-up
    int right(int r) const { return qq[r][n - 1 - r]; }         // index by row
    int bottom(int j) const { return hor[0][j]; }

    std::string left_string() const {  // bottom to top
        std::string s;
        for (int r = 0; r < n; r++) s += char('0' + left(r));
        return s;
    }
    std::string right_string() const {  // apex down to bottom-right corner
        std::string s;
        for (int r = n - 1; r >= 0; r--) s += char('0' + right(r));
        return s;
    }
    std::string bottom_string() const {  // right to left
        std::string s;
        for (int j = n - 1; j >= 0; j--) s += char('0' + bottom(j));
        return s;
    }
};

namespace detail {

struct PuzzleSearch {
    int n;
    Puzzle puz;
    std::vector<std::pair<int*, int>> trail;  // for undo: (slot, old value)
    std::vector<char> covered;                // by linear cell index
    std::vector<int> row_start;
    const std::function<void(const Puzzle&)>* out;

    int up_idx(int r, int j) const { return row_start[r] + 2 * j; }
    int down_idx(int r, int j) const { return row_start[r] + 2 * j + 1; }

    bool set(std::vector<std::vector<int>>& a, int r, int j, int v) {
        int& slot = a[r][j];
        if (slot == v) return true;
        if (slot != -1) return false;
        trail.push_back({&slot, slot});
        slot = v;
        return true;
    }
    size_t mark() const { return trail.size(); }
    void rewind(size_t m) {
        while (trail.size() > m) {
            *trail.back().first = trail.back().second;
            trail.pop_back();
        }
    }

    // cells in order u(r,0), d(r,0), u(r,1), ... per row, rows bottom-up
    int cells_in_row(int r) const { return 2 * (n - r) - 1; }

    void place_up(int r, int j, int idx);
    void place_down(int r, int j, int idx);

    void step(int idx) {
        while (idx < (int)covered.size() && covered[idx]) idx++;
        if (idx >= (int)covered.size()) { (*out)(puz); return; }
        int r = 0, k = idx;
        while (k >= cells_in_row(r)) { k -= cells_in_row(r); r++; }
        if (k % 2 == 0) place_up(r, k / 2, idx);
        else place_down(r, k / 2, idx);
    }
};

inline void PuzzleSearch::place_up(int r, int j, int idx) {
    auto& h = puz.hor; auto& p = puz.pp; auto& q = puz.qq;
    for (int v : {0, 1}) {
        size_t m = mark();
        if (set(h, r, j, v) && set(p, r, j, v) && set(q, r, j, v)) {
            puz.pieces.push_back({v ? PieceKind::Tri1Up : PieceKind::Tri0Up, r, j});
            step(idx + 1);
            puz.pieces.pop_back();
        }
        rewind(m);
    }
    if (j <= n - 2 - r) {  // RhombA with d(r,j); the "\" diagonal is hidden inside
        size_t m = mark();
        if (set(h, r, j, 1) && set(h, r + 1, j, 1) &&
            set(p, r, j, 0) && set(p, r, j + 1, 0) && set(q, r, j, 2)) {
            puz.pieces.push_back({PieceKind::RhombA, r, j});
            covered[down_idx(r, j)] = 1;
            step(idx + 1);
            covered[down_idx(r, j)] = 0;
            puz.pieces.pop_back();
        }
        rewind(m);
    }
}

inline void PuzzleSearch::place_down(int r, int j, int idx) {
    auto& h = puz.hor; auto& p = puz.pp; auto& q = puz.qq;
    for (int v : {0, 1}) {
        size_t m = mark();
        if (set(q, r, j, v) && set(p, r, j + 1, v) && set(h, r + 1, j, v)) {
            puz.pieces.push_back({v ? PieceKind::Tri1Down : PieceKind::Tri0Down, r, j});
            step(idx + 1);
            puz.pieces.pop_back();
        }
        rewind(m);
    }
    {   // RhombB with u(r+1,j)
        size_t m = mark();
        if (set(q, r, j, 0) && set(q, r + 1, j, 0) &&
            set(p, r, j + 1, 1) && set(p, r + 1, j, 1) && set(h, r + 1, j, 2)) {
            puz.pieces.push_back({PieceKind::RhombB, r, j});
            covered[up_idx(r + 1, j)] = 1;
            step(idx + 1);
            covered[up_idx(r + 1, j)] = 0;
            puz.pieces.pop_back();
        }
        rewind(m);
    }
    {   // RhombC with u(r,j+1)
        size_t m = mark();
        if (set(q, r, j, 1) && set(q, r, j + 1, 1) &&
            set(h, r + 1, j, 0) && set(h, r, j + 1, 0) && set(p, r, j + 1, 2)) {
            puz.pieces.push_back({PieceKind::RhombC, r, j});
            covered[up_idx(r, j + 1)] = 1;
            step(idx + 1);
            covered[up_idx(r, j + 1)] = 0;
            puz.pieces.pop_back();
        }
        rewind(m);
    }
}

}  // namespace detail

// Enumerate puzzles with the given boundary labels.
//   pi    : left ("/") side, read bottom-left corner to apex
//   rho   : right ("\") side, read apex down to bottom-right corner
//   sigma : bottom side, read right corner to left corner
inline void enumerate_puzzles(const std::string& pi, const std::string& rho,
                              const std::string& sigma,
                              const std::function<void(const Puzzle&)>& out) {
    int n = (int)pi.size();
    if ((int)rho.size() != n || (int)sigma.size() != n)
        throw std::invalid_argument("boundary strings must have equal length");
    detail::PuzzleSearch s;
    s.n = n;
    s.out = &out;
    s.puz.n = n;
    s.puz.hor.resize(n); s.puz.pp.resize(n); s.puz.qq.resize(n);
    s.row_start.resize(n);
    int total = 0;
    for (int r = 0; r < n; r++) {
        s.puz.hor[r].assign(n - r, -1);
        s.puz.pp[r].assign(n - r, -1);
        s.puz.qq[r].assign(n - r, -1);
        s.row_start[r] = total;
        total += s.cells_in_row(r);
    }
    s.covered.assign(total, 0);
    for (int r = 0; r < n; r++) {
        s.puz.pp[r][0] = pi[r] - '0';
        s.puz.qq[r][n - 1 - r] = rho[n - 1 - r] - '0';
        s.puz.hor[0][r] = sigma[n - 1 - r] - '0';
    }
    s.step(0);
}

inline long long count_puzzles(const std::string& pi, const std::string& rho,
                               const std::string& sigma) {
    long long c = 0;
    enumerate_puzzles(pi, rho, sigma, [&](const Puzzle&) { c++; });
    return c;
}

// a_{nu,mu,lambda^c} via puzzles: nu up the left side, mu up the right side,
// lambda^c along the bottom read right to left.
inline long long lr_coefficient_puzzle(const Partition& nu, const Partition& mu,
                                       const Partition& lambda_complement,
                                       const BoxParams& box) {
    return count_puzzles(string_of_partition(nu, box),
                         string_of_partition(mu, box),
                         string_of_partition(lambda_complement, box));
}

}  // namespace lrm
