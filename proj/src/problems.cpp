#include "vem/problems.hpp"

#include <cmath>
#include <stdexcept>

namespace vem {

TestProblem concus() {
  TestProblem p;
  p.name = "concus";
  p.domain = DomainDescriptor::rectangle({0.25, 0.25}, {0.75, 0.75});
  auto u = [](Point2 q) { return std::sqrt(std::cosh(q.y) * std::cosh(q.y) - q.x * q.x); };
  p.exact = u;
  p.boundary_fn = u;
  p.exact_grad = [u](Point2 q) {
    const double val = u(q);
    return Eigen::Vector2d(-q.x / val, std::cosh(q.y) * std::sinh(q.y) / val);
  };
  return p;
}

TestProblem catenoid() {
  TestProblem p;
  p.name = "catenoid";
  p.domain = DomainDescriptor::disk_sector({0.0, 0.0}, 4.0, 1.0);
  const double a = 0.75, b = 4.0;
  const double cb = b + std::sqrt(b * b - a * a);
  auto u = [a, cb](Point2 q) {
    const double r = std::hypot(q.x, q.y);
    return a * std::log(cb / (r + std::sqrt(r * r - a * a)));
  };
  p.exact = u;
  p.boundary_fn = u;
  p.exact_grad = [a](Point2 q) {
    // d/dr of a log(cb / (r + sqrt(r^2-a^2))) = -a / sqrt(r^2 - a^2)
    const double r = std::hypot(q.x, q.y);
    const double dudr = -a / std::sqrt(r * r - a * a);
    return Eigen::Vector2d(dudr * q.x / r, dudr * q.y / r);
  };
  return p;
}

TestProblem scherk() {
  TestProblem p;
  p.name = "scherk";
  p.domain = DomainDescriptor::rectangle({-0.8, -0.8}, {0.8, 0.8});
  auto u = [](Point2 q) { return std::asin(std::sinh(q.x) * std::sinh(q.y)); };
  p.exact = u;
  p.boundary_fn = u;
  p.exact_grad = [](Point2 q) {
    const double s = std::sinh(q.x) * std::sinh(q.y);
    const double d = std::sqrt(1.0 - s * s);
    return Eigen::Vector2d(std::cosh(q.x) * std::sinh(q.y) / d, std::sinh(q.x) * std::cosh(q.y) / d);
  };
  return p;
}

TestProblem schwarz_patch() {
  TestProblem p;
  p.name = "schwarz";
  p.domain = DomainDescriptor::rectangle({0.0, 0.0}, {1.0, 1.0});
  p.boundary_fn = [](Point2 q) {
    // phi = 0 on x=0 and y=0, phi = x on y=1, phi = y on x=1;
    // consistent at every corner.
    const double tol = 1e-12;
    if (q.y >= 1.0 - tol) return q.x;
    if (q.x >= 1.0 - tol) return q.y;
    return 0.0;
  };
  return p;
}

TestProblem disk_x2() {
  TestProblem p;
  p.name = "disk";
  p.domain = DomainDescriptor::disk({0.0, 0.0}, 1.0);
  p.boundary_fn = [](Point2 q) { return q.x * q.x; };
  return p;
}

double cantor_iterate(int n, double x) {
  if (x < 0.0 || x > 1.0) {
    throw std::domain_error("cantor_iterate: argument outside [0, 1]");
  }
  if (n <= 0) return x;
  if (x < 1.0 / 3.0) return 0.5 * cantor_iterate(n - 1, 3.0 * x);
  if (x <= 2.0 / 3.0) return 0.5;
  return 0.5 + 0.5 * cantor_iterate(n - 1, 3.0 * x - 2.0);
}

TestProblem cantor_problem(CantorPattern pattern) {
  TestProblem p;
  p.name = "cantor";
  p.domain = DomainDescriptor::rectangle({0.0, 0.0}, {1.0, 1.0});
  auto c4 = [](double t) { return cantor_iterate(4, std::clamp(t, 0.0, 1.0)); };
  if (pattern == CantorPattern::Mirror) {
    p.boundary_fn = [c4](Point2 q) {
      const double tol = 1e-12;
      if (q.y <= tol) return c4(q.x);
      if (q.x <= tol) return c4(q.y);
      if (q.x >= 1.0 - tol) return c4(1.0 - q.y);
      return c4(1.0 - q.x);  // top
    };
  } else {
    p.boundary_fn = [c4](Point2 q) {
      const double tol = 1e-12;
      if (q.y <= tol) return c4(q.x);
      if (q.x <= tol) return c4(q.y);
      if (q.x >= 1.0 - tol) return 1.0 - c4(q.y);
      return 1.0 - c4(q.x);  // top
    };
  }
  return p;
}

TestProblem problem_by_name(const std::string& name, CantorPattern pattern) {
  if (name == "concus") return concus();
  if (name == "catenoid") return catenoid();
  if (name == "scherk") return scherk();
  if (name == "schwarz") return schwarz_patch();
  if (name == "disk") return disk_x2();
  if (name == "cantor") return cantor_problem(pattern);
  throw std::invalid_argument("unknown problem '" + name +
                              "' (expected concus|catenoid|scherk|schwarz|disk|cantor)");
}

}  // namespace vem
