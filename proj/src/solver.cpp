#include "vem/solver.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "vem/parallel.hpp"

namespace vem {

ElementTable::ElementTable(const PolygonalMesh& mesh) : mesh_(&mesh) {
  const std::size_t nc = mesh.cells().size();
  elements_.resize(nc, LocalElement(std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}));
  parallel_for(nc, [&](std::size_t ci) {
    elements_[ci] = LocalElement(mesh.cell_coords(static_cast<int>(ci)));
  });
}

Eigen::VectorXd ElementTable::gather(const Eigen::VectorXd& global, std::size_t ci) const {
  const Cell& cell = mesh_->cells()[ci];
  Eigen::VectorXd local(cell.vertex_ids.size());
  for (std::size_t i = 0; i < cell.vertex_ids.size(); ++i) local[i] = global[cell.vertex_ids[i]];
  return local;
}

namespace {

LinearizedSystem assemble_impl(const PolygonalMesh& mesh, const ElementTable& elements,
                               const Eigen::VectorXd& boundary_values,
                               const Eigen::VectorXd& coefficient_source) {
  if (boundary_values.size() != mesh.dof_count()) {
    throw SolverError("assemble_linearized: dof vector does not match the mesh");
  }
  if (elements.size() != mesh.cells().size() || &elements.mesh() != &mesh) {
    throw SolverError("assemble_linearized: element table does not match the mesh");
  }
  const int n = mesh.dof_count();
  LinearizedSystem sys;
  sys.global_to_interior.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    if (!mesh.boundary_flags()[v]) {
      sys.global_to_interior[v] = static_cast<int>(sys.interior_dofs.size());
      sys.interior_dofs.push_back(v);
    }
  }
  const int ni = static_cast<int>(sys.interior_dofs.size());
  sys.rhs = Eigen::VectorXd::Zero(ni);

  const std::size_t nc = mesh.cells().size();
  std::vector<double> coeff(nc);
  parallel_for(nc, [&](std::size_t ci) {
    coeff[ci] = elements[ci].coefficient(elements.gather(coefficient_source, ci));
  });

  std::vector<Eigen::Triplet<double>> triplets;
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const Cell& cell = mesh.cells()[ci];
    const Eigen::MatrixXd& K = elements[ci].stiffness();
    const double inv_f = 1.0 / coeff[ci];
    const int m = static_cast<int>(cell.vertex_ids.size());
    for (int a = 0; a < m; ++a) {
      const int ia = sys.global_to_interior[cell.vertex_ids[a]];
      if (ia < 0) continue;
      for (int b = 0; b < m; ++b) {
        const int gb = cell.vertex_ids[b];
        const int ib = sys.global_to_interior[gb];
        const double kab = K(a, b) * inv_f;
        if (ib >= 0) {
          triplets.emplace_back(ia, ib, kab);
        } else {
          sys.rhs[ia] -= kab * boundary_values[gb];
        }
      }
    }
  }
  sys.matrix.resize(ni, ni);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return sys;
}

}  // namespace

LinearizedSystem assemble_linearized(const PolygonalMesh& mesh, const ElementTable& elements,
                                     const Eigen::VectorXd& w) {
  return assemble_impl(mesh, elements, w, w);
}

double discrete_energy(const ElementTable& elements, const Eigen::VectorXd& dofs) {
  const std::size_t nc = elements.size();
  std::vector<double> per_cell(nc);
  parallel_for(nc, [&](std::size_t ci) {
    per_cell[ci] = elements[ci].area() * elements[ci].coefficient(elements.gather(dofs, ci));
  });
  double sum = 0.0;
  for (const double e : per_cell) sum += e;
  return sum;
}

namespace {

class LinearSolver {
 public:
  LinearSolver(LinearSolverKind kind, double cg_tolerance)
      : kind_(kind), cg_tolerance_(cg_tolerance) {}

  Eigen::VectorXd solve(const Eigen::SparseMatrix<double>& matrix, const Eigen::VectorXd& rhs) {
    if (kind_ == LinearSolverKind::DirectSparse) {
      if (!analyzed_) {
        ldlt_.analyzePattern(matrix);  // sparsity is iteration-independent
        analyzed_ = true;
      }
      ldlt_.factorize(matrix);
      if (ldlt_.info() != Eigen::Success) {
        throw SolverError("direct sparse factorization failed (matrix not SPD?)");
      }
      return ldlt_.solve(rhs);
    }
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                             Eigen::DiagonalPreconditioner<double>>
        cg;
    cg.setTolerance(cg_tolerance_);
    cg.compute(matrix);
    const Eigen::VectorXd x = cg.solve(rhs);
    if (cg.info() != Eigen::Success) {
      throw SolverError("conjugate gradient did not converge");
    }
    return x;
  }

 private:
  LinearSolverKind kind_;
  double cg_tolerance_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt_;
  bool analyzed_ = false;
};

}  // namespace

SolveReport fixed_point_solve(const PolygonalMesh& mesh, const ElementTable& elements,
                              const std::function<double(Point2)>& boundary_fn,
                              const FixedPointConfig& config) {
  if (!(config.tolerance > 0.0)) throw SolverError("fixed_point_solve: tolerance must be positive");
  const int n = mesh.dof_count();

  Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
  for (int v = 0; v < n; ++v) {
    if (mesh.boundary_flags()[v]) u[v] = boundary_fn(mesh.vertices()[v]);
  }

  SolveReport report;
  LinearSolver linear(config.linear_solver, config.cg_tolerance);
  const Eigen::VectorXd zero = Eigen::VectorXd::Zero(n);

  for (int k = 0; k < config.max_iterations; ++k) {
    // First solve: coefficients from the zero vector (f = 1 everywhere),
    // i.e. the Laplace lift of phi. Afterwards coefficients follow the
    // current iterate.
    const LinearizedSystem sys = assemble_impl(mesh, elements, u, k == 0 ? zero : u);

    Eigen::VectorXd next = u;
    const Eigen::VectorXd x = linear.solve(sys.matrix, sys.rhs);
    for (std::size_t i = 0; i < sys.interior_dofs.size(); ++i) next[sys.interior_dofs[i]] = x[i];

    ++report.iterations;
    const double update = (next - u).lpNorm<Eigen::Infinity>();
    const double denom = u.lpNorm<Eigen::Infinity>();  // = max|phi| at k = 0
    const double rel = denom > 0.0 ? update / denom : update;
    report.per_iteration_updates.push_back(rel);
    report.per_iteration_energy.push_back(discrete_energy(elements, next));
    u = std::move(next);
    report.final_update_norm = rel;
    if (rel < config.tolerance) {
      report.converged = true;
      break;
    }
  }
  report.solution = DiscreteSolution{std::move(u), &mesh};
  return report;
}

}  // namespace vem
