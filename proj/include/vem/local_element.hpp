#pragma once

#include <Eigen/Dense>
#include <span>

#include "vem/geometry.hpp"

namespace vem {

/// Scaled monomial basis of P1 on a cell: m1 = 1, m2 = (x - xc)/h,
/// m3 = (y - yc)/h, with (xc, yc) the cell centroid and h its diameter.
struct ScaledMonomialBasis {
  Point2 centroid;
  double diameter = 1.0;

  double eval(int i, Point2 p) const {
    switch (i) {
      case 0: return 1.0;
      case 1: return (p.x - centroid.x) / diameter;
      default: return (p.y - centroid.y) / diameter;
    }
  }
  Eigen::Vector2d grad(int i) const {
    switch (i) {
      case 0: return {0.0, 0.0};
      case 1: return {1.0 / diameter, 0.0};
      default: return {0.0, 1.0 / diameter};
    }
  }
  double eval_linear(const Eigen::Vector3d& coeffs, Point2 p) const {
    return coeffs[0] + coeffs[1] * eval(1, p) + coeffs[2] * eval(2, p);
  }
};

/// Lowest-order VEM operators on one polygon, built from boundary data
/// only. Degrees of freedom are the vertex values, ordered like the
/// (CCW) input polygon.
///
/// The elliptic projector onto P1 solves, for v with piecewise linear
/// trace, int_E grad(Pi v) . grad q = boundary integral of v (grad q . n)
/// for q in P1 (edge integrals are trapezoid, exact for linear traces),
/// with its constant mode fixed by matching the vertex average. Then
///   K_consistency = PiStar^T (int_E grad m . grad m) PiStar,
///   S              = (I - PiDof)^T (I - PiDof)   (plain dof product),
///   K              = K_consistency + S.
class LocalElement {
 public:
  explicit LocalElement(std::span<const Point2> cell_vertex_coords);

  int n_vertices() const { return n_; }
  double area() const { return area_; }
  double diameter() const { return basis_.diameter; }
  Point2 centroid() const { return basis_.centroid; }
  const ScaledMonomialBasis& basis() const { return basis_; }

  const Eigen::MatrixXd& dof_matrix() const { return D_; }       // n x 3
  const Eigen::MatrixXd& projector_rhs() const { return B_; }    // 3 x n
  const Eigen::Matrix3d& gram() const { return G_; }             // 3 x 3
  const Eigen::MatrixXd& projector() const { return PiStar_; }   // 3 x n
  const Eigen::MatrixXd& projector_dof() const { return PiDof_; }  // n x n
  const Eigen::MatrixXd& stabilization() const { return S_; }
  const Eigen::MatrixXd& consistency() const { return Kc_; }
  const Eigen::MatrixXd& stiffness() const { return K_; }

  /// S^E((I - Pi)v, (I - Pi)v): always >= 0, zero exactly on P1 traces.
  double stabilization_energy(const Eigen::VectorXd& local_dofs) const {
    return local_dofs.dot(S_ * local_dofs);
  }

  /// Constant gradient of the projected linear.
  Eigen::Vector2d projected_gradient(const Eigen::VectorXd& local_dofs) const {
    return Eigen::Vector2d(PiStar_.row(1).dot(local_dofs), PiStar_.row(2).dot(local_dofs)) /
           basis_.diameter;
  }

  /// Coefficients of Pi v in the scaled monomial basis.
  Eigen::Vector3d projected_linear(const Eigen::VectorXd& local_dofs) const {
    return PiStar_ * local_dofs;
  }

  /// sqrt(1 + |grad Pi v|^2 + |E|^-1 S^E((I-Pi)v, (I-Pi)v)); at least 1.
  double coefficient(const Eigen::VectorXd& local_dofs) const {
    const Eigen::Vector2d g = projected_gradient(local_dofs);
    return std::sqrt(1.0 + g.squaredNorm() + stabilization_energy(local_dofs) / area_);
  }

 private:
  int n_ = 0;
  double area_ = 0.0;
  ScaledMonomialBasis basis_;
  Eigen::MatrixXd D_, B_, PiStar_, PiDof_, S_, Kc_, K_;
  Eigen::Matrix3d G_;
};

inline LocalElement build_local_element(std::span<const Point2> cell_vertex_coords) {
  return LocalElement(cell_vertex_coords);
}

}  // namespace vem
