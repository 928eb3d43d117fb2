#include "vem/geometry.hpp"

#include <algorithm>
#include <cstddef>

namespace vem {

double polygon_signed_area(std::span<const Point2> verts) {
  const std::size_t n = verts.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = verts[i];
    const Point2 b = verts[(i + 1) % n];
    twice += cross(a, b);
  }
  return 0.5 * twice;
}

CellGeometry cell_geometry(std::span<const Point2> verts) {
  if (verts.size() < 3) {
    throw GeometryError("cell_geometry: polygon needs at least 3 vertices");
  }
  const std::size_t n = verts.size();
  double twice_area = 0.0;
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = verts[i];
    const Point2 b = verts[(i + 1) % n];
    const double w = cross(a, b);
    twice_area += w;
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  const double area = 0.5 * twice_area;
  if (!(area > 0.0)) {
    throw GeometryError("cell_geometry: non-positive signed area (polygon must be CCW and non-degenerate)");
  }
  CellGeometry g;
  g.area = area;
  g.centroid = {cx / (6.0 * area), cy / (6.0 * area)};
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point2 d = verts[i] - verts[j];
      d2 = std::max(d2, dot(d, d));
    }
  }
  g.diameter = std::sqrt(d2);
  return g;
}

namespace {

bool lex_less(Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Both orientations of a segment must yield bit-identical crossings, or
// adjacent cells clipped independently disagree about shared vertices.
Point2 line_crossing(Point2 a, double da, Point2 b, double db) {
  if (lex_less(b, a)) {
    std::swap(a, b);
    std::swap(da, db);
  }
  const double t = da / (da - db);
  return a + t * (b - a);
}

}  // namespace

std::vector<Point2> clip_half_plane(std::span<const Point2> poly, Point2 n, double c) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % m];
    const double da = dot(n, a) - c;
    const double db = dot(n, b) - c;
    if (da <= 0.0) out.push_back(a);
    if ((da < 0.0 && db > 0.0) || (da > 0.0 && db < 0.0)) {
      out.push_back(line_crossing(a, da, b, db));
    }
  }
  return out;
}

std::vector<Point2> clip_circle(std::span<const Point2> poly, Point2 center, double radius) {
  std::vector<Point2> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  const double r2 = radius * radius;
  auto inside = [&](Point2 p) {
    const Point2 d = p - center;
    return dot(d, d) <= r2;
  };
  // Crossings of the open segment with the circle, ordered along a -> b,
  // snapped exactly onto the circle. Computed in a canonical orientation
  // so both incident cells get bit-identical points.
  auto crossings = [&](Point2 a, Point2 b, Point2 pts[2]) {
    const bool swapped = lex_less(b, a);
    if (swapped) std::swap(a, b);
    const Point2 d = b - a;
    const Point2 f = a - center;
    const double qa = dot(d, d);
    const double qb = 2.0 * dot(f, d);
    const double qc = dot(f, f) - r2;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc <= 0.0 || qa == 0.0) return 0;
    const double s = std::sqrt(disc);
    int k = 0;
    for (const double t : {(-qb - s) / (2.0 * qa), (-qb + s) / (2.0 * qa)}) {
      if (t > 0.0 && t < 1.0) {
        Point2 p = a + t * d;
        const Point2 radial = p - center;
        const double len = norm(radial);
        if (len > 0.0) p = center + (radius / len) * radial;
        pts[k++] = p;
      }
    }
    if (swapped && k == 2) std::swap(pts[0], pts[1]);
    return k;
  };
  for (std::size_t i = 0; i < m; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % m];
    if (inside(a)) out.push_back(a);
    Point2 pts[2];
    const int k = crossings(a, b, pts);
    for (int j = 0; j < k; ++j) out.push_back(pts[j]);
  }
  return out;
}

std::vector<Point2> dedupe_ring(std::span<const Point2> poly, double tol) {
  std::vector<Point2> out;
  out.reserve(poly.size());
  for (const Point2 p : poly) {
    if (out.empty() || distance(out.back(), p) > tol) out.push_back(p);
  }
  while (out.size() > 1 && distance(out.front(), out.back()) <= tol) out.pop_back();
  return out;
}

bool point_in_convex_polygon(std::span<const Point2> poly, Point2 p, double tol) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    const Point2 e = b - a;
    const double len = norm(e);
    if (len == 0.0) continue;
    if (cross(e, p - a) < -tol * len) return false;
  }
  return true;
}

double distance_to_segment(Point2 a, Point2 b, Point2 p) {
  const Point2 d = b - a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return distance(a, p);
  const double t = std::clamp(dot(p - a, d) / len2, 0.0, 1.0);
  return distance(a + t * d, p);
}

double distance_to_polygon(std::span<const Point2> poly, Point2 p) {
  if (point_in_convex_polygon(poly, p, 0.0)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    best = std::min(best, distance_to_segment(poly[i], poly[(i + 1) % n], p));
  }
  return best;
}

}  // namespace vem
