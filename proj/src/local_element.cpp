#include "vem/local_element.hpp"

namespace vem {

LocalElement::LocalElement(std::span<const Point2> coords) {
  const CellGeometry g = cell_geometry(coords);  // throws on degenerate input
  n_ = static_cast<int>(coords.size());
  area_ = g.area;
  basis_.centroid = g.centroid;
  basis_.diameter = g.diameter;

  D_.resize(n_, 3);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < 3; ++j) D_(i, j) = basis_.eval(j, coords[i]);
  }

  // B(j, i) = boundary integral of the hat function of vertex i times
  // grad m_j . n; the trapezoid rule turns it into half the sum of the
  // scaled outward normals of the two edges meeting at vertex i.
  B_.resize(3, n_);
  B_.row(0).setConstant(1.0 / n_);
  for (int i = 0; i < n_; ++i) {
    const Point2 prev = coords[(i + n_ - 1) % n_];
    const Point2 self = coords[i];
    const Point2 next = coords[(i + 1) % n_];
    const double sx = 0.5 * ((self.y - prev.y) + (next.y - self.y));
    const double sy = 0.5 * (-(self.x - prev.x) - (next.x - self.x));
    B_(1, i) = sx / basis_.diameter;
    B_(2, i) = sy / basis_.diameter;
  }

  G_ = B_ * D_;
  PiStar_ = G_.partialPivLu().solve(B_);
  PiDof_ = D_ * PiStar_;

  Eigen::Matrix3d grad_gram = Eigen::Matrix3d::Zero();
  grad_gram(1, 1) = grad_gram(2, 2) = area_ / (basis_.diameter * basis_.diameter);
  Kc_ = PiStar_.transpose() * grad_gram * PiStar_;

  const Eigen::MatrixXd residual = Eigen::MatrixXd::Identity(n_, n_) - PiDof_;
  S_ = residual.transpose() * residual;
  K_ = Kc_ + S_;
}

}  // namespace vem
