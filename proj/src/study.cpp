#include "vem/study.hpp"

#include <cmath>
#include <cstdio>

namespace vem {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct CsvFile {
  std::FILE* f = nullptr;
  explicit CsvFile(const std::filesystem::path& path) {
    f = std::fopen(path.string().c_str(), "w");
    if (!f) throw StudyError("cannot write output file " + path.string());
  }
  ~CsvFile() {
    if (f) std::fclose(f);
  }
};

}  // namespace

PolygonalMesh mesh_for_target(const DomainDescriptor& domain, int target_dofs, SeedMode mode,
                              int lloyd_iterations, std::uint64_t rng_seed) {
  VoronoiOptions opt;
  opt.mode = mode;
  opt.lloyd_iterations = lloyd_iterations;
  opt.rng_seed = rng_seed;
  opt.target_seeds = std::max(4, target_dofs / 2);
  PolygonalMesh mesh = generate_voronoi(domain, opt);
  const double ratio = double(mesh.dof_count()) / target_dofs;
  if (std::abs(ratio - 1.0) > 0.08) {
    opt.target_seeds = std::max(4, int(std::lround(opt.target_seeds / ratio)));
    mesh = generate_voronoi(domain, opt);
  }
  return mesh;
}

void write_csv(const ConvergenceTable& table, const std::filesystem::path& path) {
  CsvFile out(path);
  std::fprintf(out.f, "mesh,h,N,it,e_h1,ecr_h1,e_l2,ecr_l2,c1,c2\n");
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const ErrorReport& r = table.rows[i];
    std::fprintf(out.f, "%s,%.9e,%d,%d,%.9e,", table.row_names[i].c_str(), r.h, r.N, r.iterations,
                 r.e_h1);
    if (i > 0) std::fprintf(out.f, "%.9e", table.ecr_h1[i]);
    std::fprintf(out.f, ",%.9e,", r.e_l2);
    if (i > 0) std::fprintf(out.f, "%.9e", table.ecr_l2[i]);
    std::fprintf(out.f, ",%.9e,%.9e\n", r.c1, r.c2);
  }
}

void emit_surface(const DiscreteSolution& solution, const std::filesystem::path& path) {
  if (!solution.mesh) throw StudyError("emit_surface: solution has no mesh binding");
  CsvFile out(path);
  std::fprintf(out.f, "x,y,u\n");
  const PolygonalMesh& mesh = *solution.mesh;
  for (int v = 0; v < mesh.dof_count(); ++v) {
    std::fprintf(out.f, "%.9e,%.9e,%.9e\n", mesh.vertices()[v].x, mesh.vertices()[v].y,
                 solution.dof_values[v]);
  }
  std::filesystem::path mesh_path = path;
  mesh_path += ".mesh";
  save_mesh(mesh, mesh_path);
}

StudyResult run_study(const StudyConfig& config) {
  if (config.targets.size() < 2) {
    throw StudyError("study needs at least 2 refinement levels for rate computation");
  }
  for (std::size_t i = 1; i < config.targets.size(); ++i) {
    if (config.targets[i] <= config.targets[i - 1]) {
      throw StudyError("refinement targets must be strictly increasing");
    }
  }
  if (config.fine_multiplier && *config.fine_multiplier < 2) {
    throw StudyError("fine-mesh reference multiplier must be at least 2");
  }

  const TestProblem problem = problem_by_name(config.problem, config.cantor_pattern);
  if (!config.fine_multiplier && !problem.has_exact()) {
    throw StudyError("problem '" + problem.name +
                     "' has no analytic solution; use a fine-mesh reference");
  }

  FixedPointConfig fp;
  fp.tolerance = config.tolerance;
  fp.linear_solver = config.linear_solver;

  std::function<double(Point2)> exact = problem.exact;
  std::function<Eigen::Vector2d(Point2)> exact_grad = problem.exact_grad;
  std::unique_ptr<ReferenceSolution> reference;
  if (config.fine_multiplier) {
    VoronoiOptions fine;
    fine.mode = SeedMode::Random;  // one diagram build; accuracy comes from size
    fine.target_seeds = std::max(4, *config.fine_multiplier * config.targets.back() / 2);
    fine.rng_seed = mix_seed(config.rng_seed, 0xFEEDULL);
    reference = std::make_unique<ReferenceSolution>(problem, fine, fp);
    exact = reference->value_fn();
    exact_grad = reference->gradient_fn();
  }

  StudyResult result;
  for (std::size_t level = 0; level < config.targets.size(); ++level) {
    const PolygonalMesh mesh = mesh_for_target(problem.domain, config.targets[level], config.mode,
                                               config.lloyd_iterations,
                                               mix_seed(config.rng_seed, level));
    const ElementTable elements(mesh);
    const SolveReport solve = fixed_point_solve(mesh, elements, problem.boundary_fn, fp);
    result.all_converged = result.all_converged && solve.converged;

    ErrorReport row;
    row.h = mesh.mesh_size();
    row.N = mesh.dof_count();
    row.iterations = solve.iterations;
    row.e_h1 = error_h1(mesh, elements, solve.solution.dof_values, exact_grad);
    row.e_l2 = error_l2(mesh, elements, solve.solution.dof_values, exact);
    row.c1 = constant_C(mesh, elements, solve.solution.dof_values, LengthScale::MeshH);
    row.c2 = constant_C(mesh, elements, solve.solution.dof_values, LengthScale::InvSqrtN);
    result.table.append(config.problem + "_" + std::to_string(level + 1), row);

    if (!config.emit_surface_path.empty() && level + 1 == config.targets.size()) {
      emit_surface(solve.solution, config.emit_surface_path);
    }
  }

  if (!config.out_csv.empty()) write_csv(result.table, config.out_csv);
  return result;
}

}  // namespace vem
