#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <string>

#include "vem/domain.hpp"

namespace vem {

/// One benchmark instance: the domain, the Dirichlet trace, and the
/// closed-form solution and gradient when the problem has them.
struct TestProblem {
  std::string name;
  DomainDescriptor domain;
  std::function<double(Point2)> boundary_fn;
  std::function<double(Point2)> exact;                 // null if unknown
  std::function<Eigen::Vector2d(Point2)> exact_grad;   // null if unknown

  bool has_exact() const { return static_cast<bool>(exact); }
};

/// u = sqrt(cosh^2(y) - x^2) on (0.25, 0.75)^2.
TestProblem concus();

/// Catenoid: u = a log((b + sqrt(b^2-a^2)) / (r + sqrt(r^2-a^2))),
/// a = 0.75, b = 4, r = |x|, on {|x| < 4} ∩ {x > 1}.
TestProblem catenoid();

/// Scherk's fifth surface: u = asin(sinh x sinh y) on (-0.8, 0.8)^2.
TestProblem scherk();

/// Schwarz D patch on (0,1)^2: phi = 0 on {x=0} and {y=0}, phi = x on
/// {y=1}, phi = y on {x=1}. No closed-form solution.
TestProblem schwarz_patch();

/// Unit disk with phi(x, y) = x^2. No closed-form solution.
TestProblem disk_x2();

/// n-th iterate of the sequence converging to the Cantor function:
/// c_0(x) = x, c_{n+1}(x) = c_n(3x)/2 on [0,1/3), 1/2 on [1/3,2/3],
/// 1/2 + c_n(3x-2)/2 on (2/3,1]. Throws outside [0,1].
double cantor_iterate(int n, double x);

/// How the fourth Cantor iterate is wrapped around the unit square.
/// Both patterns are continuous at all four corners:
///   Mirror: bottom c(x), left c(y), right c(1-y), top c(1-x)
///   Invert: bottom c(x), left c(y), right 1-c(y), top 1-c(x)
enum class CantorPattern { Mirror, Invert };

TestProblem cantor_problem(CantorPattern pattern = CantorPattern::Mirror);

/// Lookup by CLI name: concus|catenoid|scherk|schwarz|disk|cantor.
TestProblem problem_by_name(const std::string& name, CantorPattern pattern = CantorPattern::Mirror);

}  // namespace vem
