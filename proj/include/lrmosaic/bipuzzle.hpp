#pragma once
#include <vector>
#include <string>
#include <functional>
#include <stdexcept>
#include "puzzle.hpp"

namespace lrm {

// Bipuzzle board: the 60/120-degree rhombus of side n, as n rows of a
// parallelogram whose left and right sides both run in the "/" direction.
// Row r holds up cells u(r,j) and down cells d(r,j), j = 0..n-1, with d(r,j)
// right of u(r,j).  Edge arrays follow the puzzle convention:
//   hor[r][j] : bottom edge of u(r,j), r = 0..n (row n is the top side)
//   pp[r][j]  : "/" edge left of u(r,j), j = 0..n (column n is the right side)
//   qq[r][j]  : "\" edge between u(r,j) and d(r,j)
// The short diagonal of the rhombus consists of the edges qq[r][n-1-r].
struct Bipuzzle {
    int n = 0;
    std::vector<std::vector<int>> hor, pp, qq;
    std::vector<PuzzlePiece> pieces;

    // boundary data (pi, rho, sigma, tau), read clockwise from the
    // lower-left corner: left side up, top side, right side down, bottom
    std::string pi_string() const {
        std::string s;
        for (int r = 0; r < n; r++) s += char('0' + pp[r][0]);
        return s;
    }
    std::string rho_string() const {
        std::string s;
        for (int j = 0; j < n; j++) s += char('0' + hor[n][j]);
        return s;
    }
    std::string sigma_string() const {
        std::string s;
        for (int r = n - 1; r >= 0; r--) s += char('0' + pp[r][n]);
        return s;
    }
    std::string tau_string() const {
        std::string s;
        for (int j = n - 1; j >= 0; j--) s += char('0' + hor[0][j]);
        return s;
    }
};

namespace detail {

struct BipuzzleSearch {
    int n;
    Bipuzzle puz;
    std::vector<std::pair<int*, int>> trail;
    std::vector<char> covered;  // 2n cells per row: u(r,0), d(r,0), u(r,1), ...
    const std::function<void(const Bipuzzle&)>* out;

    int up_idx(int r, int j) const { return 2 * n * r + 2 * j; }
    int down_idx(int r, int j) const { return 2 * n * r + 2 * j + 1; }

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

    void step(int idx) {
        while (idx < (int)covered.size() && covered[idx]) idx++;
        if (idx >= (int)covered.size()) { (*out)(puz); return; }
        int r = idx / (2 * n), k = idx % (2 * n);
        if (k % 2 == 0) place_up(r, k / 2, idx);
        else place_down(r, k / 2, idx);
    }

    void place_up(int r, int j, int idx) {
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
        {   // RhombA with d(r,j); the "\" diagonal is hidden inside
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

    void place_down(int r, int j, int idx) {
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
        if (r + 1 < n) {  // RhombB with u(r+1,j)
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
        if (j + 1 < n) {  // RhombC with u(r,j+1)
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
};

// Recover the piece list of a fully labeled triangular puzzle board.
inline void pieces_from_labels(Puzzle& p) {
    p.pieces.clear();
    for (int r = 0; r < p.n; r++)
        for (int j = 0; j < p.n - r; j++) {
            if (p.qq[r][j] == 2) p.pieces.push_back({PieceKind::RhombA, r, j});
            else if (p.hor[r][j] == 2) {
                // hidden horizontal above d(r-1,j)
            } else if (p.pp[r][j] == 2) {
                // hidden "/" right of d(r,j-1)
            } else
                p.pieces.push_back({p.hor[r][j] ? PieceKind::Tri1Up : PieceKind::Tri0Up, r, j});
        }
    for (int r = 0; r < p.n; r++)
        for (int j = 0; j + r + 1 < p.n; j++) {
            if (p.qq[r][j] == 2) continue;  // consumed by the RhombA above
            if (p.hor[r + 1][j] == 2) p.pieces.push_back({PieceKind::RhombB, r, j});
            else if (p.pp[r][j + 1] == 2) p.pieces.push_back({PieceKind::RhombC, r, j});
            else
                p.pieces.push_back(
                    {p.qq[r][j] ? PieceKind::Tri1Down : PieceKind::Tri0Down, r, j});
        }
}

}  // namespace detail

inline void enumerate_bipuzzles(const std::string& pi, const std::string& rho,
                                const std::string& sigma, const std::string& tau,
                                const std::function<void(const Bipuzzle&)>& out) {
    int n = (int)pi.size();
    if ((int)rho.size() != n || (int)sigma.size() != n || (int)tau.size() != n)
        throw std::invalid_argument("boundary strings must have equal length");
    detail::BipuzzleSearch s;
    s.n = n;
    s.out = &out;
    s.puz.n = n;
    s.puz.hor.assign(n + 1, std::vector<int>(n, -1));
    s.puz.pp.assign(n, std::vector<int>(n + 1, -1));
    s.puz.qq.assign(n, std::vector<int>(n, -1));
    s.covered.assign(2 * n * n, 0);
    for (int r = 0; r < n; r++) {
        s.puz.pp[r][0] = pi[r] - '0';
        s.puz.pp[r][n] = sigma[n - 1 - r] - '0';
    }
    for (int j = 0; j < n; j++) {
        s.puz.hor[n][j] = rho[j] - '0';
        s.puz.hor[0][j] = tau[n - 1 - j] - '0';
    }
    s.step(0);
}

inline long long count_bipuzzles(const std::string& pi, const std::string& rho,
                                 const std::string& sigma, const std::string& tau) {
    long long c = 0;
    enumerate_bipuzzles(pi, rho, sigma, tau, [&](const Bipuzzle&) { c++; });
    return c;
}

// Split a bipuzzle along its short diagonal into two single puzzles.  The
// lower half keeps the board's coordinates; the upper half is rotated 180
// degrees onto a standard triangular board.  For boundary data
// (pi, rho, sigma, tau) the halves have boundary data (pi, upsilon, tau) and
// (sigma, upsilon-reversed, rho) for the shared diagonal string upsilon.
// Throws if a rhombus piece straddles the diagonal (no valid bipuzzle has
// one; such an input would be an integrity failure).
inline std::pair<Puzzle, Puzzle> split_bipuzzle(const Bipuzzle& bp) {
    int n = bp.n;
    for (int r = 0; r < n; r++)
        if (bp.qq[r][n - 1 - r] == 2)
            throw std::logic_error("bipuzzle has a rhombus across its dividing diagonal");
    Puzzle lo, up;
    lo.n = up.n = n;
    lo.hor.resize(n); lo.pp.resize(n); lo.qq.resize(n);
    up.hor.resize(n); up.pp.resize(n); up.qq.resize(n);
    for (int r = 0; r < n; r++) {
        lo.hor[r].assign(n - r, -1);
        lo.pp[r].assign(n - r, -1);
        lo.qq[r].assign(n - r, -1);
        up.hor[r].assign(n - r, -1);
        up.pp[r].assign(n - r, -1);
        up.qq[r].assign(n - r, -1);
    }
    for (int r = 0; r < n; r++)
        for (int j = 0; j < n - r; j++) {
            lo.hor[r][j] = bp.hor[r][j];
            lo.pp[r][j] = bp.pp[r][j];
            lo.qq[r][j] = bp.qq[r][j];
        }
    // the 180-degree rotation sends bipuzzle edges of the upper half to
    // up.hor[n-r][n-1-j] = hor[r][j], up.pp[n-1-r][n-j] = pp[r][j],
    // up.qq[n-1-r][n-1-j] = qq[r][j]
    for (int r = 0; r <= n; r++)
        for (int j = 0; j < n; j++)
            if (r > 0 && n - r < n && n - 1 - j < n - (n - r)) up.hor[n - r][n - 1 - j] = bp.hor[r][j];
    for (int r = 0; r < n; r++)
        for (int j = 1; j <= n; j++)
            if (n - j < n - (n - 1 - r)) up.pp[n - 1 - r][n - j] = bp.pp[r][j];
    for (int r = 0; r < n; r++)
        for (int j = 0; j < n; j++)
            if (n - 1 - j < n - (n - 1 - r)) up.qq[n - 1 - r][n - 1 - j] = bp.qq[r][j];
    detail::pieces_from_labels(lo);
    detail::pieces_from_labels(up);
    return {lo, up};
}

// Glue two puzzles along their shared diagonal string: lo's right side must
// be the reversal of up's right side.  Inverse of split_bipuzzle.
inline Bipuzzle glue_puzzles(const Puzzle& lo, const Puzzle& up) {
    int n = lo.n;
    if (up.n != n) throw std::invalid_argument("puzzle sizes differ");
    std::string a = lo.right_string(), b = up.right_string();
    for (int r = 0; r < n; r++)
        if (a[r] != b[n - 1 - r]) throw std::invalid_argument("diagonal strings do not match");
    Bipuzzle bp;
    bp.n = n;
    bp.hor.assign(n + 1, std::vector<int>(n, -1));
    bp.pp.assign(n, std::vector<int>(n + 1, -1));
    bp.qq.assign(n, std::vector<int>(n, -1));
    for (int r = 0; r < n; r++)
        for (int j = 0; j < n - r; j++) {
            bp.hor[r][j] = lo.hor[r][j];
            bp.pp[r][j] = lo.pp[r][j];
            bp.qq[r][j] = lo.qq[r][j];
        }
    for (int r = 1; r <= n; r++)
        for (int j = 0; j < n; j++)
            if (n - 1 - j < r) bp.hor[r][j] = up.hor[n - r][n - 1 - j];
    for (int r = 0; r < n; r++)
        for (int j = 1; j <= n; j++)
            if (n - j <= r) bp.pp[r][j] = up.pp[n - 1 - r][n - j];
    for (int r = 0; r < n; r++)
        for (int j = 0; j < n; j++)
            if (n - 1 - j <= r) bp.qq[r][j] = up.qq[n - 1 - r][n - 1 - j];
    for (const PuzzlePiece& pc : lo.pieces) bp.pieces.push_back(pc);
    for (const PuzzlePiece& pc : up.pieces) {
        PuzzlePiece q = pc;
        switch (pc.kind) {
            case PieceKind::Tri0Up: q = {PieceKind::Tri0Down, n - 1 - pc.r, n - 1 - pc.j}; break;
            case PieceKind::Tri1Up: q = {PieceKind::Tri1Down, n - 1 - pc.r, n - 1 - pc.j}; break;
            case PieceKind::Tri0Down: q = {PieceKind::Tri0Up, n - 1 - pc.r, n - 1 - pc.j}; break;
            case PieceKind::Tri1Down: q = {PieceKind::Tri1Up, n - 1 - pc.r, n - 1 - pc.j}; break;
            // RhombA spans u(r,j)+d(r,j); its rotated image spans
            // d(r',j')+u(r',j') with r' = n-1-r, j' = n-1-j, again a RhombA
            case PieceKind::RhombA: q = {PieceKind::RhombA, n - 1 - pc.r, n - 1 - pc.j}; break;
            // RhombB spans d(r,j)+u(r+1,j) -> d(n-2-r,j')+u(n-1-r,j')
            case PieceKind::RhombB: q = {PieceKind::RhombB, n - 2 - pc.r, n - 1 - pc.j}; break;
            // RhombC spans d(r,j)+u(r,j+1) -> d(r',n-2-j)+u(r',n-1-j)
            case PieceKind::RhombC: q = {PieceKind::RhombC, n - 1 - pc.r, n - 2 - pc.j}; break;
        }
        bp.pieces.push_back(q);
    }
    return bp;
}

}  // namespace lrm
