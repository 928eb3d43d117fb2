#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "vem/domain.hpp"
#include "vem/geometry.hpp"

namespace vem {

class MeshError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::vector<int> vertex_ids;  // CCW
  double area = 0.0;
  Point2 centroid;
  double diameter = 0.0;
};

struct MeshQualityReport {
  double min_edge_over_diameter = 0.0;
  double min_inradius_over_diameter = 0.0;
  int cell_count = 0;
  int vertex_count = 0;
};

/// Conforming polygonal mesh. Immutable after construction; boundary
/// vertices are derived from edge multiplicity (an edge on exactly one
/// cell is a boundary edge).
class PolygonalMesh {
 public:
  PolygonalMesh(std::vector<Point2> vertices, std::vector<std::vector<int>> cell_vertex_ids);

  const std::vector<Point2>& vertices() const { return vertices_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<bool>& boundary_flags() const { return boundary_; }
  double mesh_size() const { return h_; }
  int dof_count() const { return static_cast<int>(vertices_.size()); }

  std::vector<Point2> cell_coords(int cell_index) const;

  /// Checks the mesh invariants: conforming edges, boundary flags, and
  /// (when a domain is given) that cell areas tile the domain area within
  /// 1e-10 relative (exact polygonal domains) or 1e-3 (chord-approximated
  /// curved domains), and that boundary vertices lie on the boundary.
  void validate(const DomainDescriptor* domain = nullptr) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<Cell> cells_;
  std::vector<bool> boundary_;
  double h_ = 0.0;
};

MeshQualityReport quality_report(const PolygonalMesh& mesh);

/// Text format, UTF-8:
///   vem-mesh v1
///   vertices <n>   followed by n lines "x y"
///   cells <m>      followed by m lines of CCW 0-based vertex indices
///   boundary <k>   followed by k boundary vertex indices
PolygonalMesh load_mesh(const std::filesystem::path& path);
void save_mesh(const PolygonalMesh& mesh, const std::filesystem::path& path);

}  // namespace vem
