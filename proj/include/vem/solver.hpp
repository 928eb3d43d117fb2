#pragma once

#include <Eigen/Sparse>
#include <functional>
#include <memory>
#include <vector>

#include "vem/local_element.hpp"
#include "vem/mesh.hpp"

namespace vem {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Global dof vector (one value per mesh vertex) bound to its mesh.
struct DiscreteSolution {
  Eigen::VectorXd dof_values;
  const PolygonalMesh* mesh = nullptr;
};

enum class LinearSolverKind { DirectSparse, ConjugateGradient };

struct FixedPointConfig {
  double tolerance = 1e-9;
  int max_iterations = 200;
  LinearSolverKind linear_solver = LinearSolverKind::DirectSparse;
  double cg_tolerance = 1e-12;  // relative residual
};

struct SolveReport {
  DiscreteSolution solution;
  int iterations = 0;  // number of linear solves performed
  bool converged = false;
  double final_update_norm = 0.0;
  std::vector<double> per_iteration_updates;
  std::vector<double> per_iteration_energy;  // J_h after each solve
};

/// Per-cell VEM operators for a whole mesh (cells built in parallel,
/// stored in cell order).
class ElementTable {
 public:
  explicit ElementTable(const PolygonalMesh& mesh);
  const LocalElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t size() const { return elements_.size(); }
  const PolygonalMesh& mesh() const { return *mesh_; }

  Eigen::VectorXd gather(const Eigen::VectorXd& global, std::size_t cell_index) const;

 private:
  const PolygonalMesh* mesh_;
  std::vector<LocalElement> elements_;
};

struct LinearizedSystem {
  Eigen::SparseMatrix<double> matrix;  // interior x interior, SPD
  Eigen::VectorXd rhs;                 // Dirichlet columns moved across
  std::vector<int> interior_dofs;      // interior index -> global dof
  std::vector<int> global_to_interior; // global dof -> interior index or -1
};

/// Assembles sum_E K_E / f_h^E(w|_E) with Dirichlet dofs eliminated.
/// `w` is a full dof vector; its boundary entries are the Dirichlet
/// values used on the right-hand side.
LinearizedSystem assemble_linearized(const PolygonalMesh& mesh, const ElementTable& elements,
                                     const Eigen::VectorXd& w);

/// Discrete area functional J_h(v) = sum_E |E| f_h^E(v).
double discrete_energy(const ElementTable& elements, const Eigen::VectorXd& dofs);

/// Picard iteration on the frozen-coefficient linear problems. The first
/// solve uses f_h^E evaluated on the zero vector (a plain Laplace lift of
/// the boundary data); the stopping rule is the relative inf-norm update
/// against the previous iterate, with max|phi| guarding the denominator.
SolveReport fixed_point_solve(const PolygonalMesh& mesh, const ElementTable& elements,
                              const std::function<double(Point2)>& boundary_fn,
                              const FixedPointConfig& config = {});

}  // namespace vem
