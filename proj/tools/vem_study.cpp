#include <CLI11.hpp>
#include <cstdio>
#include <string>

#include "vem/study.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Convergence-study runner for the minimal surface VEM solver"};

  vem::StudyConfig config;
  std::string mode = "uniform";
  std::string reference = "auto";
  std::string cantor_pattern = "mirror";
  std::string solver = "direct";
  std::string out, surface;

  app.add_option("--problem", config.problem,
                 "Test problem: concus|catenoid|scherk|schwarz|disk|cantor")
      ->required();
  app.add_option("--mode", mode, "Voronoi mesh family: uniform|random")
      ->check(CLI::IsMember({"uniform", "random"}));
  app.add_option("--targets", config.targets, "Comma-separated dof targets, one per level")
      ->required()
      ->delimiter(',');
  app.add_option("--tol", config.tolerance, "Fixed-point stopping tolerance (default 1e-9)");
  app.add_option("--seed", config.rng_seed, "RNG seed for mesh generation");
  app.add_option("--out", out, "Output CSV path");
  app.add_option("--reference", reference,
                 "Error reference: analytic, fine:<dof multiplier>, or auto "
                 "(analytic when the problem has one, else fine:16)");
  app.add_option("--cantor-pattern", cantor_pattern, "Cantor boundary pattern: mirror|invert")
      ->check(CLI::IsMember({"mirror", "invert"}));
  app.add_option("--emit-surface", surface, "Write the finest-level solution as x,y,u CSV");
  app.add_option("--lloyd", config.lloyd_iterations, "Lloyd sweep cap for uniform meshes");
  app.add_option("--solver", solver, "Linear solver: direct|cg")
      ->check(CLI::IsMember({"direct", "cg"}));

  CLI11_PARSE(app, argc, argv);

  try {
    config.mode = (mode == "uniform") ? vem::SeedMode::Uniform : vem::SeedMode::Random;
    config.cantor_pattern =
        (cantor_pattern == "mirror") ? vem::CantorPattern::Mirror : vem::CantorPattern::Invert;
    config.linear_solver = (solver == "direct") ? vem::LinearSolverKind::DirectSparse
                                                : vem::LinearSolverKind::ConjugateGradient;
    config.out_csv = out;
    config.emit_surface_path = surface;

    if (reference == "analytic") {
      config.fine_multiplier.reset();
    } else if (reference.rfind("fine:", 0) == 0) {
      config.fine_multiplier = std::stoi(reference.substr(5));
    } else if (reference == "auto") {
      const vem::TestProblem p = vem::problem_by_name(config.problem, config.cantor_pattern);
      if (!p.has_exact()) config.fine_multiplier = 16;
    } else {
      std::fprintf(stderr, "error: bad --reference value '%s'\n", reference.c_str());
      return 1;
    }

    const vem::StudyResult result = vem::run_study(config);

    std::printf("mesh            h             N       it   e_h1          ecr     e_l2          ecr     c1        c2\n");
    for (std::size_t i = 0; i < result.table.rows.size(); ++i) {
      const vem::ErrorReport& r = result.table.rows[i];
      std::printf("%-14s  %.6e  %-7d %-4d %.6e  ", result.table.row_names[i].c_str(), r.h, r.N,
                  r.iterations, r.e_h1);
      if (i > 0) std::printf("%6.3f", result.table.ecr_h1[i]);
      else std::printf("     -");
      std::printf("  %.6e  ", r.e_l2);
      if (i > 0) std::printf("%6.3f", result.table.ecr_l2[i]);
      else std::printf("     -");
      std::printf("  %.6f  %.6f\n", r.c1, r.c2);
    }
    if (!result.all_converged) {
      std::fprintf(stderr, "warning: at least one level did not reach the tolerance\n");
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
