#pragma once
// Exact plane arithmetic over the ring Z[sqrt(3)]/2.  Every vertex that can
// occur in a tiling by unit triangles, unit squares and 30/150 rhombi whose
// edges point in multiples of 30 degrees has coordinates of the form
// (a + b*sqrt3)/2 with integers a, b.  Points are therefore stored as four
// integers and all predicates are exact; no floating point is used anywhere
// in the geometry kernel.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrm {

using i64 = long long;
using i128 = __int128;

// sign of a + b*sqrt(3)
inline int sign_quad(i64 a, i64 b) {
  if (a == 0 && b == 0) return 0;
  if (a >= 0 && b >= 0) return +1;
  if (a <= 0 && b <= 0) return -1;
  // opposite signs: compare a^2 vs 3 b^2, the larger magnitude wins
  i128 aa = (i128)a * a;
  i128 bb = (i128)b * b * 3;
  if (aa == bb) return 0;  // cannot happen for integers (sqrt3 irrational) unless both 0
  bool a_wins = aa > bb;
  return a_wins ? (a > 0 ? +1 : -1) : (b > 0 ? +1 : -1);
}

struct ExactPoint {
  // x = (a + b*sqrt3)/2 , y = (c + e*sqrt3)/2
  i64 a = 0, b = 0, c = 0, e = 0;

  friend ExactPoint operator+(ExactPoint p, ExactPoint q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.e + q.e};
  }
  friend ExactPoint operator-(ExactPoint p, ExactPoint q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.e - q.e};
  }
  ExactPoint operator-() const { return {-a, -b, -c, -e}; }
  friend ExactPoint operator*(i64 k, ExactPoint p) {
    return {k * p.a, k * p.b, k * p.c, k * p.e};
  }
  bool operator==(const ExactPoint&) const = default;
  // representation is unique, so tuple order is a valid total order (for containers)
  bool operator<(const ExactPoint& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    if (c != o.c) return c < o.c;
    return e < o.e;
  }

  int sign_x() const { return sign_quad(a, b); }
  int sign_y() const { return sign_quad(c, e); }
};

// total order: by x, then y (exact)
inline int cmp_point(const ExactPoint& p, const ExactPoint& q) {
  int sx = sign_quad(p.a - q.a, p.b - q.b);
  if (sx != 0) return sx;
  return sign_quad(p.c - q.c, p.e - q.e);
}
inline bool point_less(const ExactPoint& p, const ExactPoint& q) { return cmp_point(p, q) < 0; }

struct PointHash {
  size_t operator()(const ExactPoint& p) const {
    size_t h = 1469598103934665603ull;
    for (i64 v : {p.a, p.b, p.c, p.e}) {
      h ^= (size_t)v + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Rotation by 30 degrees about the origin.  Stays inside the ring: the
// intermediate numerators are provably even for every point that is an
// integer combination of the twelve unit vectors.
inline ExactPoint rotate30_once(const ExactPoint& p) {
  i64 na = 3 * p.b - p.c;
  i64 nb = p.a - p.e;
  i64 nc = p.a + 3 * p.e;
  i64 ne = p.b + p.c;
  if ((na | nb | nc | ne) & 1)
    throw std::logic_error("rotate30: point not in the rotation lattice");
  return {na / 2, nb / 2, nc / 2, ne / 2};
}

// k*30 degrees counterclockwise about the origin (k may be negative)
inline ExactPoint rotate30(ExactPoint p, int k) {
  k = ((k % 12) + 12) % 12;
  for (int i = 0; i < k; ++i) p = rotate30_once(p);
  return p;
}

inline ExactPoint rotate30_about(const ExactPoint& p, const ExactPoint& center, int k) {
  return center + rotate30(p - center, k);
}

// 180 degree rotation about a point given as "2*center" (so that midpoints of
// segments, which are half-lattice points, can act as centers exactly).
inline ExactPoint rotate180_about_doubled(const ExactPoint& p, const ExactPoint& center2) {
  return {center2.a - p.a, center2.b - p.b, center2.c - p.c, center2.e - p.e};
}

// unit vector in direction k*30 degrees
inline ExactPoint unit_dir(int k) {
  static const std::array<ExactPoint, 12> table = [] {
    std::array<ExactPoint, 12> t{};
    ExactPoint u{2, 0, 0, 0};  // (1,0)
    for (int i = 0; i < 12; ++i) {
      t[i] = u;
      u = rotate30_once(u);
    }
    return t;
  }();
  return table[((k % 12) + 12) % 12];
}

// If v is a unit vector in direction k*30, return k in 0..11; else -1.
inline int dir_of_unit(const ExactPoint& v) {
  for (int k = 0; k < 12; ++k)
    if (unit_dir(k) == v) return k;
  return -1;
}

// dot(p,q) and cross(p,q) both live in (P + Q*sqrt3)/4; we return {P,Q}.
struct Quad4 {
  i64 p = 0, q = 0;  // value (p + q*sqrt3)/4
  friend Quad4 operator+(Quad4 x, Quad4 y) { return {x.p + y.p, x.q + y.q}; }
  friend Quad4 operator-(Quad4 x, Quad4 y) { return {x.p - y.p, x.q - y.q}; }
  int sign() const { return sign_quad(p, q); }
  bool operator==(const Quad4&) const = default;
};

inline Quad4 cross(const ExactPoint& u, const ExactPoint& v) {
  // x_u*y_v - x_v*y_u
  return {u.a * v.c + 3 * u.b * v.e - v.a * u.c - 3 * v.b * u.e,
          u.a * v.e + u.b * v.c - v.a * u.e - v.b * u.c};
}
inline Quad4 dot(const ExactPoint& u, const ExactPoint& v) {
  return {u.a * v.a + 3 * u.b * v.b + u.c * v.c + 3 * u.e * v.e,
          u.a * v.b + u.b * v.a + u.c * v.e + u.e * v.c};
}

// Area of a polygon, exact.  Value is (p + q*sqrt3)/4.
struct ExactArea {
  i64 p = 0, q = 0;
  bool operator==(const ExactArea&) const = default;
  friend ExactArea operator+(ExactArea x, ExactArea y) { return {x.p + y.p, x.q + y.q}; }
  friend ExactArea operator-(ExactArea x, ExactArea y) { return {x.p - y.p, x.q - y.q}; }
  int sign() const { return sign_quad(p, q); }
};

inline ExactArea polygon_area(const std::vector<ExactPoint>& poly) {
  Quad4 s{};  // twice the area, in quarters
  for (size_t i = 0; i < poly.size(); ++i) {
    const ExactPoint& u = poly[i];
    const ExactPoint& v = poly[(i + 1) % poly.size()];
    s = s + cross(u, v);
  }
  if ((s.p | s.q) & 1) throw std::logic_error("polygon_area: odd half-quarters");
  return {s.p / 2, s.q / 2};
}

// double of a point (used when exact midpoints are needed)
inline ExactPoint doubled(const ExactPoint& p) { return {2 * p.a, 2 * p.b, 2 * p.c, 2 * p.e}; }

inline double to_double_x(const ExactPoint& p) { return (p.a + p.b * 1.7320508075688772) / 2.0; }
inline double to_double_y(const ExactPoint& p) { return (p.c + p.e * 1.7320508075688772) / 2.0; }

}  // namespace lrm
