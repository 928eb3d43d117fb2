#include "vem/mesh.hpp"

#include <algorithm>
#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

namespace vem {

namespace {

// Undirected edge -> number of incident cells.
std::map<std::pair<int, int>, int> edge_multiplicities(const std::vector<Cell>& cells) {
  std::map<std::pair<int, int>, int> mult;
  for (const Cell& c : cells) {
    const int n = static_cast<int>(c.vertex_ids.size());
    for (int i = 0; i < n; ++i) {
      int a = c.vertex_ids[i];
      int b = c.vertex_ids[(i + 1) % n];
      if (a > b) std::swap(a, b);
      ++mult[{a, b}];
    }
  }
  return mult;
}

}  // namespace

PolygonalMesh::PolygonalMesh(std::vector<Point2> vertices, std::vector<std::vector<int>> cell_vertex_ids)
    : vertices_(std::move(vertices)) {
  const int nv = static_cast<int>(vertices_.size());
  cells_.reserve(cell_vertex_ids.size());
  for (std::size_t ci = 0; ci < cell_vertex_ids.size(); ++ci) {
    Cell cell;
    cell.vertex_ids = std::move(cell_vertex_ids[ci]);
    if (cell.vertex_ids.size() < 3) {
      throw MeshError("cell " + std::to_string(ci) + ": fewer than 3 vertices");
    }
    std::vector<Point2> coords;
    coords.reserve(cell.vertex_ids.size());
    for (const int v : cell.vertex_ids) {
      if (v < 0 || v >= nv) {
        throw MeshError("cell " + std::to_string(ci) + ": vertex index " + std::to_string(v) +
                        " out of range (vertex count " + std::to_string(nv) + ")");
      }
      coords.push_back(vertices_[v]);
    }
    CellGeometry g;
    try {
      g = cell_geometry(coords);
    } catch (const GeometryError& e) {
      throw MeshError("cell " + std::to_string(ci) + ": " + e.what());
    }
    cell.area = g.area;
    cell.centroid = g.centroid;
    cell.diameter = g.diameter;
    h_ = std::max(h_, g.diameter);
    cells_.push_back(std::move(cell));
  }

  boundary_.assign(nv, false);
  for (const auto& [edge, mult] : edge_multiplicities(cells_)) {
    if (mult == 1) {
      boundary_[edge.first] = true;
      boundary_[edge.second] = true;
    }
  }
}

std::vector<Point2> PolygonalMesh::cell_coords(int cell_index) const {
  const Cell& c = cells_[cell_index];
  std::vector<Point2> coords;
  coords.reserve(c.vertex_ids.size());
  for (const int v : c.vertex_ids) coords.push_back(vertices_[v]);
  return coords;
}

void PolygonalMesh::validate(const DomainDescriptor* domain) const {
  if (cells_.empty()) throw MeshError("mesh has no cells");

  std::vector<bool> used(vertices_.size(), false);
  for (const Cell& c : cells_) {
    for (const int v : c.vertex_ids) used[v] = true;
  }
  for (std::size_t v = 0; v < used.size(); ++v) {
    if (!used[v]) throw MeshError("dangling vertex " + std::to_string(v));
  }

  for (const auto& [edge, mult] : edge_multiplicities(cells_)) {
    if (mult > 2) {
      throw MeshError("edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                      ") shared by " + std::to_string(mult) + " cells");
    }
    if (mult == 1 && (!boundary_[edge.first] || !boundary_[edge.second])) {
      throw MeshError("boundary edge with interior endpoint");
    }
  }

  double total_area = 0.0;
  for (const Cell& c : cells_) total_area += c.area;
  if (domain) {
    const double rel = std::abs(total_area - domain->area()) / domain->area();
    const double tol = domain->curved() ? 1e-3 : 1e-10;
    if (rel > tol) {
      throw MeshError("cells do not tile the domain: relative area defect " + std::to_string(rel));
    }
    const double btol = 1e-9 * domain->diameter();
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      if (boundary_[v] && domain->boundary_distance(vertices_[v]) > btol) {
        throw MeshError("boundary vertex " + std::to_string(v) + " at (" +
                        std::to_string(vertices_[v].x) + ", " + std::to_string(vertices_[v].y) +
                        ") off the domain boundary by " +
                        std::to_string(domain->boundary_distance(vertices_[v])));
      }
    }
  }
}

MeshQualityReport quality_report(const PolygonalMesh& mesh) {
  MeshQualityReport r;
  r.cell_count = static_cast<int>(mesh.cells().size());
  r.vertex_count = mesh.dof_count();
  r.min_edge_over_diameter = std::numeric_limits<double>::infinity();
  r.min_inradius_over_diameter = std::numeric_limits<double>::infinity();
  for (const Cell& c : mesh.cells()) {
    const int n = static_cast<int>(c.vertex_ids.size());
    double min_edge = std::numeric_limits<double>::infinity();
    double inradius = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const Point2 a = mesh.vertices()[c.vertex_ids[i]];
      const Point2 b = mesh.vertices()[c.vertex_ids[(i + 1) % n]];
      min_edge = std::min(min_edge, distance(a, b));
      inradius = std::min(inradius, distance_to_segment(a, b, c.centroid));
    }
    r.min_edge_over_diameter = std::min(r.min_edge_over_diameter, min_edge / c.diameter);
    r.min_inradius_over_diameter = std::min(r.min_inradius_over_diameter, inradius / c.diameter);
  }
  return r;
}

PolygonalMesh load_mesh(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file " + path.string());

  std::string word;
  auto expect = [&](const std::string& token) {
    if (!(in >> word) || word != token) {
      throw MeshError(path.string() + ": expected '" + token + "', got '" + word + "'");
    }
  };
  expect("vem-mesh");
  expect("v1");

  expect("vertices");
  std::size_t nv = 0;
  if (!(in >> nv)) throw MeshError(path.string() + ": bad vertex count");
  std::vector<Point2> vertices(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    if (!(in >> vertices[i].x >> vertices[i].y)) {
      throw MeshError(path.string() + ": bad vertex line " + std::to_string(i));
    }
  }

  expect("cells");
  std::size_t nc = 0;
  if (!(in >> nc)) throw MeshError(path.string() + ": bad cell count");
  std::vector<std::vector<int>> cells(nc);
  std::string line;
  std::getline(in, line);  // consume end of the count line
  for (std::size_t i = 0; i < nc; ++i) {
    if (!std::getline(in, line)) throw MeshError(path.string() + ": missing cell line " + std::to_string(i));
    std::istringstream ls(line);
    int v;
    while (ls >> v) cells[i].push_back(v);
    if (cells[i].size() < 3) throw MeshError(path.string() + ": cell " + std::to_string(i) + " has fewer than 3 vertices");
  }

  expect("boundary");
  std::size_t nb = 0;
  if (!(in >> nb)) throw MeshError(path.string() + ": bad boundary count");
  std::vector<int> boundary(nb);
  for (std::size_t i = 0; i < nb; ++i) {
    if (!(in >> boundary[i])) throw MeshError(path.string() + ": bad boundary index " + std::to_string(i));
    if (boundary[i] < 0 || boundary[i] >= static_cast<int>(nv)) {
      throw MeshError(path.string() + ": boundary index " + std::to_string(boundary[i]) + " out of range");
    }
  }

  PolygonalMesh mesh(std::move(vertices), std::move(cells));

  // The stored list must agree with the flags derived from edge multiplicity.
  std::vector<bool> stored(nv, false);
  for (const int v : boundary) stored[v] = true;
  for (std::size_t v = 0; v < nv; ++v) {
    if (stored[v] != mesh.boundary_flags()[v]) {
      throw MeshError(path.string() + ": boundary list inconsistent with mesh connectivity at vertex " +
                      std::to_string(v));
    }
  }
  return mesh;
}

void save_mesh(const PolygonalMesh& mesh, const std::filesystem::path& path) {
  std::FILE* f = std::fopen(path.string().c_str(), "w");
  if (!f) throw MeshError("cannot write mesh file " + path.string());
  std::fprintf(f, "vem-mesh v1\n");
  std::fprintf(f, "vertices %zu\n", mesh.vertices().size());
  for (const Point2& p : mesh.vertices()) {
    std::fprintf(f, "%.17g %.17g\n", p.x, p.y);
  }
  std::fprintf(f, "cells %zu\n", mesh.cells().size());
  for (const Cell& c : mesh.cells()) {
    for (std::size_t i = 0; i < c.vertex_ids.size(); ++i) {
      std::fprintf(f, "%s%d", i ? " " : "", c.vertex_ids[i]);
    }
    std::fprintf(f, "\n");
  }
  std::size_t nb = 0;
  for (const bool b : mesh.boundary_flags()) nb += b;
  std::fprintf(f, "boundary %zu\n", nb);
  for (std::size_t v = 0; v < mesh.boundary_flags().size(); ++v) {
    if (mesh.boundary_flags()[v]) std::fprintf(f, "%zu\n", v);
  }
  std::fclose(f);
}

}  // namespace vem
