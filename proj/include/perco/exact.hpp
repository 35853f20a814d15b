#pragma once

#include <cstdint>
#include <cmath>
#include <stdexcept>

namespace perco {

// Exact arithmetic over Z[sqrt(3)].
//
// Every coordinate in this project is an integer multiple of sqrt(3)/2 in x
// and 1/2 in y. We store points in "half units" (ux, uy) with
//   x = ux * sqrt(3)/2,   y = uy * 1/2,
// and do geometry on coordinates scaled by 2, so that scaled values live in
// Z[sqrt(3)] and never need a denominator. Real3 represents a + b*sqrt(3).
struct Real3 {
  long long a = 0;  // rational part
  long long b = 0;  // sqrt(3) part

  static Real3 of_int(long long v) { return {v, 0}; }
  static Real3 of_sqrt3(long long v) { return {0, v}; }

  Real3 operator+(const Real3& o) const { return {a + o.a, b + o.b}; }
  Real3 operator-(const Real3& o) const { return {a - o.a, b - o.b}; }
  Real3 operator-() const { return {-a, -b}; }
  Real3 operator*(const Real3& o) const {
    return {a * o.a + 3 * b * o.b, a * o.b + b * o.a};
  }
  Real3 operator*(long long k) const { return {a * k, b * k}; }
  bool operator==(const Real3& o) const { return a == o.a && b == o.b; }

  // Sign of a + b*sqrt(3). Zero only for a == b == 0 (sqrt(3) irrational).
  int sign() const {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    __int128 a2 = static_cast<__int128>(a) * a;
    __int128 b2 = static_cast<__int128>(b) * b * 3;
    if (a > 0) return a2 > b2 ? 1 : -1;   // b < 0
    return a2 > b2 ? -1 : 1;              // a < 0, b > 0
  }

  bool operator<(const Real3& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Real3& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Real3& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Real3& o) const { return (*this - o).sign() >= 0; }

  double value() const { return double(a) + double(b) * 1.7320508075688772; }
};

inline Real3 abs(const Real3& v) { return v.sign() < 0 ? -v : v; }
inline Real3 min(const Real3& u, const Real3& v) { return u <= v ? u : v; }
inline Real3 max(const Real3& u, const Real3& v) { return u >= v ? u : v; }

// A point in scaled-by-2 coordinates (x2, y2) = (2x, 2y).
struct XPoint {
  Real3 x, y;
  XPoint operator-(const XPoint& o) const { return {x - o.x, y - o.y}; }
  bool operator==(const XPoint& o) const { return x == o.x && y == o.y; }
};

// Half-unit lattice position: x = ux*sqrt(3)/2, y = uy/2.
struct HalfPoint {
  int ux = 0;
  int uy = 0;
  bool operator==(const HalfPoint& o) const { return ux == o.ux && uy == o.uy; }
  XPoint xpoint() const { return {Real3::of_sqrt3(ux), Real3::of_int(uy)}; }
  double x() const { return ux * 0.8660254037844386; }
  double y() const { return uy * 0.5; }
};

inline Real3 cross(const XPoint& u, const XPoint& v) { return u.x * v.y - u.y * v.x; }
inline Real3 dot(const XPoint& u, const XPoint& v) { return u.x * v.x + u.y * v.y; }

// Axis-aligned box, bounds in scaled-by-2 coordinates.
struct Box {
  Real3 xlo, xhi, ylo, yhi;

  // [-r, r]^2 with integer r.
  static Box square(long long r) {
    Real3 h = Real3::of_int(2 * r);
    return {-h, h, -h, h};
  }
  // [-r, r]^2 with r given unscaled as a + b*sqrt(3).
  static Box square_r(const Real3& r) {
    Real3 h = r * 2;
    return {-h, h, -h, h};
  }
  // General rectangle, corners unscaled.
  static Box rect(const Real3& x0, const Real3& x1, const Real3& y0, const Real3& y1) {
    return {x0 * 2, x1 * 2, y0 * 2, y1 * 2};
  }

  bool valid() const { return xlo <= xhi && ylo <= yhi; }
  Real3 width() const { return xhi - xlo; }
  Real3 height() const { return yhi - ylo; }

  bool contains(const XPoint& p) const {
    return xlo <= p.x && p.x <= xhi && ylo <= p.y && p.y <= yhi;
  }
  bool contains_strict(const XPoint& p) const {
    return xlo < p.x && p.x < xhi && ylo < p.y && p.y < yhi;
  }
};

int orientation(const XPoint& a, const XPoint& b, const XPoint& c);
bool on_segment(const XPoint& a, const XPoint& b, const XPoint& p);
bool segments_intersect(const XPoint& a, const XPoint& b, const XPoint& c, const XPoint& d);
bool segment_intersects_box(const XPoint& p, const XPoint& q, const Box& box);

// squared distance(point, segment) <= d2 (all scaled-by-2; d2 is the square
// of a scaled distance).
bool point_segment_dist2_le(const XPoint& x, const XPoint& p, const XPoint& q, const Real3& d2);
bool segments_dist2_le(const XPoint& a, const XPoint& b, const XPoint& c, const XPoint& d, const Real3& d2);
// distance(segment, box) <= d with d unscaled (box in scaled coords).
bool segment_box_dist_le(const XPoint& p, const XPoint& q, const Box& box, const Real3& d);

// L-infinity norm of a point, scaled by 2.
inline Real3 linf2(const XPoint& p) { return max(abs(p.x), abs(p.y)); }

// floor(k * sqrt(3) / 2): largest integer m with 2m <= k*sqrt(3).
long long floor_half_sqrt3(long long k);

}  // namespace perco
