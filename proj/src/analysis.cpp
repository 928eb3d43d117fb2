#include "vem/analysis.hpp"

#include <cmath>
#include <limits>

#include "vem/parallel.hpp"
#include "vem/quadrature.hpp"

namespace vem {

void ConvergenceTable::append(std::string name, const ErrorReport& report) {
  if (!rows.empty() && report.N <= rows.back().N) {
    throw AnalysisError("convergence table rows must have strictly increasing N");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (rows.empty()) {
    ecr_h1.push_back(nan);
    ecr_l2.push_back(nan);
  } else {
    const ErrorReport& prev = rows.back();
    ecr_h1.push_back(ecr(prev.N, prev.e_h1, report.N, report.e_h1));
    ecr_l2.push_back(ecr(prev.N, prev.e_l2, report.N, report.e_l2));
  }
  row_names.push_back(std::move(name));
  rows.push_back(report);
}

namespace {

// Per-cell numerator/denominator contributions, reduced in cell order.
template <typename PerCell>
std::pair<double, double> accumulate_ratio(std::size_t cell_count, PerCell&& per_cell) {
  std::vector<std::pair<double, double>> parts(cell_count);
  parallel_for(cell_count, [&](std::size_t ci) { parts[ci] = per_cell(ci); });
  double num = 0.0, den = 0.0;
  for (const auto& [n, d] : parts) {
    num += n;
    den += d;
  }
  return {num, den};
}

}  // namespace

double error_h1(const PolygonalMesh& mesh, const ElementTable& elements, const Eigen::VectorXd& u_h,
                const std::function<Eigen::Vector2d(Point2)>& exact_grad) {
  const auto [num, den] = accumulate_ratio(mesh.cells().size(), [&](std::size_t ci) {
    const Eigen::Vector2d g = elements[ci].projected_gradient(elements.gather(u_h, ci));
    double n = 0.0, d = 0.0;
    for (const QuadPoint& q : cell_quadrature(mesh.cell_coords(static_cast<int>(ci)),
                                              mesh.cells()[ci].centroid)) {
      const Eigen::Vector2d ge = exact_grad(q.p);
      n += q.w * (ge - g).squaredNorm();
      d += q.w * ge.squaredNorm();
    }
    return std::make_pair(n, d);
  });
  if (!(den > 0.0)) throw AnalysisError("error_h1: exact solution has zero gradient norm");
  return std::sqrt(num / den);
}

double error_l2(const PolygonalMesh& mesh, const ElementTable& elements, const Eigen::VectorXd& u_h,
                const std::function<double(Point2)>& exact) {
  const auto [num, den] = accumulate_ratio(mesh.cells().size(), [&](std::size_t ci) {
    const Eigen::Vector3d coeffs = elements[ci].projected_linear(elements.gather(u_h, ci));
    const ScaledMonomialBasis& basis = elements[ci].basis();
    double n = 0.0, d = 0.0;
    for (const QuadPoint& q : cell_quadrature(mesh.cell_coords(static_cast<int>(ci)),
                                              mesh.cells()[ci].centroid)) {
      const double ue = exact(q.p);
      const double diff = ue - basis.eval_linear(coeffs, q.p);
      n += q.w * diff * diff;
      d += q.w * ue * ue;
    }
    return std::make_pair(n, d);
  });
  if (!(den > 0.0)) throw AnalysisError("error_l2: exact solution has zero norm");
  return std::sqrt(num / den);
}

double constant_C(const PolygonalMesh& mesh, const ElementTable& elements, const Eigen::VectorXd& u_h,
                  LengthScale scale) {
  double total = 0.0;
  for (std::size_t ci = 0; ci < elements.size(); ++ci) {
    total += elements[ci].stabilization_energy(elements.gather(u_h, ci));
  }
  const double length = scale == LengthScale::MeshH ? mesh.mesh_size()
                                                    : 1.0 / std::sqrt(double(mesh.dof_count()));
  return std::sqrt(total) / length;
}

double ecr(double n_prev, double e_prev, double n_curr, double e_curr) {
  if (!(e_prev > 0.0) || !(e_curr > 0.0)) {
    throw AnalysisError("ecr: errors must be positive");
  }
  if (!(n_curr > n_prev)) {
    throw AnalysisError("ecr: dof counts must be increasing");
  }
  return -2.0 * std::log(e_curr / e_prev) / std::log(n_curr / n_prev);
}

ReferenceSolution::ReferenceSolution(const TestProblem& problem, const VoronoiOptions& fine_mesh_spec,
                                     const FixedPointConfig& config) {
  mesh_ = std::make_unique<PolygonalMesh>(generate_voronoi(problem.domain, fine_mesh_spec));
  elements_ = std::make_unique<ElementTable>(*mesh_);
  report_ = fixed_point_solve(*mesh_, *elements_, problem.boundary_fn, config);
  if (!report_.converged) {
    throw AnalysisError("reference solve did not converge in " +
                        std::to_string(report_.iterations) + " iterations");
  }

  const std::size_t nc = mesh_->cells().size();
  cell_linear_.resize(nc);
  cell_gradient_.resize(nc);
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const Eigen::VectorXd local = elements_->gather(report_.solution.dof_values, ci);
    cell_linear_[ci] = (*elements_)[ci].projected_linear(local);
    cell_gradient_[ci] = (*elements_)[ci].projected_gradient(local);
  }

  // Bucket cells by bounding box; about one cell per bucket.
  const Point2 lo = problem.domain.bbox_lo();
  const Point2 hi = problem.domain.bbox_hi();
  grid_lo_ = lo;
  const double span = std::max(hi.x - lo.x, hi.y - lo.y);
  const int target = static_cast<int>(std::ceil(std::sqrt(double(nc))));
  grid_nx_ = grid_ny_ = std::max(1, target);
  grid_step_ = span / grid_nx_;
  grid_.assign(static_cast<std::size_t>(grid_nx_) * grid_ny_, {});
  for (std::size_t ci = 0; ci < nc; ++ci) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const int v : mesh_->cells()[ci].vertex_ids) {
      const Point2 p = mesh_->vertices()[v];
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    const int ix0 = std::clamp(int((xmin - lo.x) / grid_step_), 0, grid_nx_ - 1);
    const int ix1 = std::clamp(int((xmax - lo.x) / grid_step_), 0, grid_nx_ - 1);
    const int iy0 = std::clamp(int((ymin - lo.y) / grid_step_), 0, grid_ny_ - 1);
    const int iy1 = std::clamp(int((ymax - lo.y) / grid_step_), 0, grid_ny_ - 1);
    for (int iy = iy0; iy <= iy1; ++iy) {
      for (int ix = ix0; ix <= ix1; ++ix) {
        grid_[std::size_t(iy) * grid_nx_ + ix].push_back(static_cast<int>(ci));
      }
    }
  }
  snap_tol_ = 1e-5 * problem.domain.diameter();
}

int ReferenceSolution::locate(Point2 p) const {
  const int ix = std::clamp(int((p.x - grid_lo_.x) / grid_step_), 0, grid_nx_ - 1);
  const int iy = std::clamp(int((p.y - grid_lo_.y) / grid_step_), 0, grid_ny_ - 1);
  const auto& bucket = grid_[std::size_t(iy) * grid_nx_ + ix];
  const double tol = 1e-12 * (grid_step_ * grid_nx_);
  for (const int ci : bucket) {
    if (point_in_convex_polygon(mesh_->cell_coords(ci), p, tol)) return ci;
  }
  // Chord-approximated boundaries differ slightly between meshes; accept
  // the nearest candidate within the snap tolerance.
  int best = -1;
  double best_d = snap_tol_;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      const int jx = ix + dx, jy = iy + dy;
      if (jx < 0 || jx >= grid_nx_ || jy < 0 || jy >= grid_ny_) continue;
      for (const int ci : grid_[std::size_t(jy) * grid_nx_ + jx]) {
        const double d = distance_to_polygon(mesh_->cell_coords(ci), p);
        if (d < best_d) {
          best_d = d;
          best = ci;
        }
      }
    }
  }
  if (best < 0) {
    throw AnalysisError("reference evaluation outside the mesh at (" + std::to_string(p.x) + ", " +
                        std::to_string(p.y) + ")");
  }
  return best;
}

double ReferenceSolution::value(Point2 p) const {
  const int ci = locate(p);
  return (*elements_)[ci].basis().eval_linear(cell_linear_[ci], p);
}

Eigen::Vector2d ReferenceSolution::gradient(Point2 p) const {
  return cell_gradient_[locate(p)];
}

std::function<double(Point2)> ReferenceSolution::value_fn() const {
  return [this](Point2 p) { return value(p); };
}

std::function<Eigen::Vector2d(Point2)> ReferenceSolution::gradient_fn() const {
  return [this](Point2 p) { return gradient(p); };
}

}  // namespace vem
