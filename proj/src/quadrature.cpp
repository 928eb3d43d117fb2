#include "vem/quadrature.hpp"

namespace vem {

namespace {

// Dunavant degree-4 rule on the reference triangle, 6 points.
// Weights sum to 1 (reference area 1/2 absorbed in the Jacobian factor).
constexpr int kNumPoints = 6;
constexpr double kBary[kNumPoints][2] = {
    {0.108103018168070, 0.445948490915965},
    {0.445948490915965, 0.108103018168070},
    {0.445948490915965, 0.445948490915965},
    {0.816847572980459, 0.091576213509771},
    {0.091576213509771, 0.816847572980459},
    {0.091576213509771, 0.091576213509771},
};
constexpr double kWeights[kNumPoints] = {
    0.223381589678011, 0.223381589678011, 0.223381589678011,
    0.109951743655322, 0.109951743655322, 0.109951743655322,
};

}  // namespace

std::vector<QuadPoint> cell_quadrature(std::span<const Point2> poly, Point2 interior_point) {
  const std::size_t n = poly.size();
  std::vector<QuadPoint> out;
  out.reserve(n * kNumPoints);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % n];
    const Point2 c = interior_point;
    const double jac = std::abs(cross(b - a, c - a));  // 2 x triangle area
    for (int q = 0; q < kNumPoints; ++q) {
      const double u = kBary[q][0], v = kBary[q][1];
      out.push_back({{a.x + u * (b.x - a.x) + v * (c.x - a.x),
                      a.y + u * (b.y - a.y) + v * (c.y - a.y)},
                     0.5 * jac * kWeights[q]});
    }
  }
  return out;
}

}  // namespace vem
