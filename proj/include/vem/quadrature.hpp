#pragma once

#include <span>
#include <vector>

#include "vem/geometry.hpp"

namespace vem {

struct QuadPoint {
  Point2 p;
  double w = 0.0;
};

/// Quadrature over a star-shaped polygon by fan triangulation from an
/// interior point (the centroid) with a degree-4 symmetric 6-point rule
/// on each triangle. Exact for bivariate polynomials up to degree 4.
std::vector<QuadPoint> cell_quadrature(std::span<const Point2> poly, Point2 interior_point);

template <typename F>
double integrate_cell(std::span<const Point2> poly, Point2 interior_point, F&& f) {
  double sum = 0.0;
  for (const QuadPoint& q : cell_quadrature(poly, interior_point)) {
    sum += q.w * f(q.p);
  }
  return sum;
}

}  // namespace vem
