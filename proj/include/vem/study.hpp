#pragma once

#include <filesystem>
#include <optional>

#include "vem/analysis.hpp"

namespace vem {

class StudyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct StudyConfig {
  std::string problem = "concus";
  SeedMode mode = SeedMode::Uniform;
  std::vector<int> targets;  // dof targets per refinement level, increasing
  double tolerance = 1e-9;
  std::uint64_t rng_seed = 0;
  std::filesystem::path out_csv;             // empty: don't write
  std::optional<int> fine_multiplier;        // set: fine-mesh reference; unset: analytic
  CantorPattern cantor_pattern = CantorPattern::Mirror;
  std::filesystem::path emit_surface_path;   // empty: none (finest-level solution)
  int lloyd_iterations = 100;
  LinearSolverKind linear_solver = LinearSolverKind::DirectSparse;
};

struct StudyResult {
  ConvergenceTable table;
  bool all_converged = true;
};

/// Generates the mesh family, solves each level, assembles the
/// convergence table and optionally writes it as CSV with columns
/// mesh,h,N,it,e_h1,ecr_h1,e_l2,ecr_l2,c1,c2 (blank rates on row one,
/// numerics with 10 significant digits). Deterministic per config.
StudyResult run_study(const StudyConfig& config);

void write_csv(const ConvergenceTable& table, const std::filesystem::path& path);

/// Vertex table "x,y,u" (header + one line per dof); the mesh itself is
/// saved next to it with the extra extension ".mesh".
void emit_surface(const DiscreteSolution& solution, const std::filesystem::path& path);

/// Voronoi mesh with roughly `target_dofs` vertices (seeds ~ dofs/2 with
/// one corrective re-generation).
PolygonalMesh mesh_for_target(const DomainDescriptor& domain, int target_dofs, SeedMode mode,
                              int lloyd_iterations, std::uint64_t rng_seed);

}  // namespace vem
