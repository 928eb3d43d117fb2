#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace vem {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Area, centroid and diameter of a simple CCW polygon.
struct CellGeometry {
  double area = 0.0;
  Point2 centroid;
  double diameter = 0.0;
};

double polygon_signed_area(std::span<const Point2> verts);

/// Shoelace area, polygon centroid, max pairwise vertex distance.
/// Throws GeometryError if the polygon has fewer than 3 vertices or
/// non-positive signed area (wrong orientation or degenerate).
CellGeometry cell_geometry(std::span<const Point2> verts);

/// Keeps the part of a convex polygon with dot(n, p) <= c.
/// Vertices on the cut line are kept once; may return fewer than 3 points.
std::vector<Point2> clip_half_plane(std::span<const Point2> poly, Point2 n, double c);

/// Intersection of a convex polygon with the disk |p - center| <= radius,
/// with every boundary arc replaced by the chord of the clipped cell.
/// Entry/exit points lie exactly on the circle.
std::vector<Point2> clip_circle(std::span<const Point2> poly, Point2 center, double radius);

/// Removes consecutive points closer than tol (also across the wrap-around).
std::vector<Point2> dedupe_ring(std::span<const Point2> poly, double tol);

bool point_in_convex_polygon(std::span<const Point2> poly, Point2 p, double tol);

/// Distance from p to the polygon boundary; 0 if p is inside.
double distance_to_polygon(std::span<const Point2> poly, Point2 p);

double distance_to_segment(Point2 a, Point2 b, Point2 p);

}  // namespace vem
