#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "vem/problems.hpp"
#include "vem/solver.hpp"
#include "vem/voronoi.hpp"

namespace vem {

class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ErrorReport {
  double h = 0.0;
  int N = 0;
  int iterations = 0;
  double e_h1 = 0.0;
  double e_l2 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

struct ConvergenceTable {
  std::vector<std::string> row_names;
  std::vector<ErrorReport> rows;
  std::vector<double> ecr_h1;  // NaN for the first row
  std::vector<double> ecr_l2;

  void append(std::string name, const ErrorReport& report);
};

/// Relative H1 error |grad u - grad Pi u_h| / |grad u| by per-cell
/// quadrature; the projected gradient is constant on each cell.
double error_h1(const PolygonalMesh& mesh, const ElementTable& elements, const Eigen::VectorXd& u_h,
                const std::function<Eigen::Vector2d(Point2)>& exact_grad);

/// Relative L2 error |u - Pi u_h| / |u| with the per-cell projected linear.
double error_l2(const PolygonalMesh& mesh, const ElementTable& elements, const Eigen::VectorXd& u_h,
                const std::function<double(Point2)>& exact);

enum class LengthScale { MeshH, InvSqrtN };

/// (1/l) sqrt(sum_E S^E((I-Pi)u_h, (I-Pi)u_h)) with l = h or 1/sqrt(N).
double constant_C(const PolygonalMesh& mesh, const ElementTable& elements, const Eigen::VectorXd& u_h,
                  LengthScale scale);

/// Estimated convergence rate from consecutive (N, error) pairs under
/// the N ~ h^-2 assumption: -2 ln(e_curr/e_prev) / ln(N_curr/N_prev).
double ecr(double n_prev, double e_prev, double n_curr, double e_curr);

/// Self-computed reference for problems without a closed form: the same
/// discretization solved on a much finer mesh, exposed through point
/// evaluation of the per-cell projected linears.
class ReferenceSolution {
 public:
  ReferenceSolution(const TestProblem& problem, const VoronoiOptions& fine_mesh_spec,
                    const FixedPointConfig& config = {});

  double value(Point2 p) const;
  Eigen::Vector2d gradient(Point2 p) const;

  std::function<double(Point2)> value_fn() const;
  std::function<Eigen::Vector2d(Point2)> gradient_fn() const;

  const PolygonalMesh& mesh() const { return *mesh_; }
  const SolveReport& report() const { return report_; }

 private:
  int locate(Point2 p) const;

  std::unique_ptr<PolygonalMesh> mesh_;
  std::unique_ptr<ElementTable> elements_;
  SolveReport report_;
  std::vector<Eigen::Vector3d> cell_linear_;
  std::vector<Eigen::Vector2d> cell_gradient_;
  // Uniform grid over the bounding box; each bucket lists candidate cells.
  Point2 grid_lo_;
  double grid_step_ = 1.0;
  int grid_nx_ = 0, grid_ny_ = 0;
  std::vector<std::vector<int>> grid_;
  double snap_tol_ = 0.0;
};

}  // namespace vem
