#pragma once

#include <cstdint>

#include "vem/domain.hpp"
#include "vem/mesh.hpp"

namespace vem {

enum class SeedMode { Uniform, Random };

struct VoronoiOptions {
  int target_seeds = 0;
  SeedMode mode = SeedMode::Uniform;
  int lloyd_iterations = 100;  // uniform mode only
  std::uint64_t rng_seed = 0;
};

/// Clipped Voronoi mesh of the domain. Uniform mode seeds a jittered
/// lattice and applies Lloyd centroid relaxation until the sweep cap or
/// until centroid movement stalls (below 1e-8·h or at the seed-snapping
/// resolution); random mode uses i.i.d. uniform seeds with no relaxation.
/// Deterministic for fixed options.
PolygonalMesh generate_voronoi(const DomainDescriptor& domain, const VoronoiOptions& options);

}  // namespace vem
