#include "perco/exact.hpp"

namespace perco {

int orientation(const XPoint& a, const XPoint& b, const XPoint& c) {
  return cross(b - a, c - a).sign();
}

bool on_segment(const XPoint& a, const XPoint& b, const XPoint& p) {
  if (orientation(a, b, p) != 0) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
         min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool segments_intersect(const XPoint& a, const XPoint& b, const XPoint& c, const XPoint& d) {
  int o1 = orientation(a, b, c);
  int o2 = orientation(a, b, d);
  int o3 = orientation(c, d, a);
  int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool segment_intersects_box(const XPoint& p, const XPoint& q, const Box& box) {
  if (box.contains(p) || box.contains(q)) return true;
  // Quick reject on the bounding interval.
  if (max(p.x, q.x) < box.xlo || min(p.x, q.x) > box.xhi) return false;
  if (max(p.y, q.y) < box.ylo || min(p.y, q.y) > box.yhi) return false;
  XPoint c00{box.xlo, box.ylo}, c10{box.xhi, box.ylo};
  XPoint c01{box.xlo, box.yhi}, c11{box.xhi, box.yhi};
  return segments_intersect(p, q, c00, c10) || segments_intersect(p, q, c10, c11) ||
         segments_intersect(p, q, c11, c01) || segments_intersect(p, q, c01, c00);
}

bool point_segment_dist2_le(const XPoint& x, const XPoint& p, const XPoint& q, const Real3& d2) {
  XPoint d = q - p;
  Real3 len2 = dot(d, d);
  if (len2.sign() == 0) {  // degenerate segment
    XPoint v = x - p;
    return dot(v, v) <= d2;
  }
  Real3 t = dot(x - p, d);
  if (t.sign() <= 0) {
    XPoint v = x - p;
    return dot(v, v) <= d2;
  }
  if (t >= len2) {
    XPoint v = x - q;
    return dot(v, v) <= d2;
  }
  // Perpendicular case: cross^2 <= d2 * len2.
  Real3 c = cross(x - p, d);
  return c * c <= d2 * len2;
}

bool segments_dist2_le(const XPoint& a, const XPoint& b, const XPoint& c, const XPoint& d, const Real3& d2) {
  if (segments_intersect(a, b, c, d)) return d2.sign() >= 0;
  return point_segment_dist2_le(a, c, d, d2) || point_segment_dist2_le(b, c, d, d2) ||
         point_segment_dist2_le(c, a, b, d2) || point_segment_dist2_le(d, a, b, d2);
}

bool segment_box_dist_le(const XPoint& p, const XPoint& q, const Box& box, const Real3& d) {
  if (segment_intersects_box(p, q, box)) return true;
  Real3 d2s = (d * 2) * (d * 2);  // square of the scaled distance
  XPoint c00{box.xlo, box.ylo}, c10{box.xhi, box.ylo};
  XPoint c01{box.xlo, box.yhi}, c11{box.xhi, box.yhi};
  return segments_dist2_le(p, q, c00, c10, d2s) || segments_dist2_le(p, q, c10, c11, d2s) ||
         segments_dist2_le(p, q, c11, c01, d2s) || segments_dist2_le(p, q, c01, c00, d2s);
}

long long floor_half_sqrt3(long long k) {
  if (k == 0) return 0;
  long long guess = static_cast<long long>(std::floor(k * 0.8660254037844386));
  // Fix up rounding with exact comparisons: want max m with 2m <= k*sqrt(3).
  auto le = [&](long long m) { return (Real3{-2 * m, k}).sign() >= 0; };
  while (!le(guess)) --guess;
  while (le(guess + 1)) ++guess;
  return guess;
}

}  // namespace perco
