#include "vem/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include <boost/polygon/voronoi.hpp>

namespace vem {

namespace {

// Affine map between world coordinates and the int32 grid the Voronoi
// builder requires. Isotropic so distances are preserved up to scale.
struct IntFrame {
  Point2 center;
  double half = 1.0;                       // world half-extent mapped to int_span
  static constexpr double int_span = double(1 << 30);

  explicit IntFrame(const DomainDescriptor& domain) {
    const Point2 lo = domain.bbox_lo(), hi = domain.bbox_hi();
    center = {0.5 * (lo.x + hi.x), 0.5 * (lo.y + hi.y)};
    half = 0.5 * std::max(hi.x - lo.x, hi.y - lo.y) * 1.0625;
  }
  std::int32_t to_int(double w, double c) const {
    return static_cast<std::int32_t>(std::llround((w - c) / half * int_span));
  }
  std::pair<std::int32_t, std::int32_t> to_int(Point2 p) const {
    return {to_int(p.x, center.x), to_int(p.y, center.y)};
  }
  Point2 to_world(double ix, double iy) const {
    return {center.x + ix / int_span * half, center.y + iy / int_span * half};
  }
  double snap_resolution() const { return half / int_span; }
};

struct IntPairHash {
  std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
    return std::hash<std::int64_t>()(k.first * 0x9E3779B97F4A7C15LL + k.second);
  }
};

// Snaps seeds onto the int grid, dropping exact duplicates (order-stable).
std::vector<std::pair<std::int32_t, std::int32_t>> snap_seeds(const std::vector<Point2>& seeds,
                                                              const IntFrame& frame) {
  std::vector<std::pair<std::int32_t, std::int32_t>> out;
  out.reserve(seeds.size());
  std::unordered_set<std::pair<std::int64_t, std::int64_t>, IntPairHash> seen;
  for (const Point2 s : seeds) {
    const auto [ix, iy] = frame.to_int(s);
    if (seen.insert({ix, iy}).second) out.push_back({ix, iy});
  }
  return out;
}

// Clipped Voronoi cell polygons, indexed like the (deduplicated) seeds.
// Cells whose clipped polygon is degenerate come back empty.
std::vector<std::vector<Point2>> clipped_cells(
    const std::vector<std::pair<std::int32_t, std::int32_t>>& int_seeds,
    const DomainDescriptor& domain, const IntFrame& frame) {
  namespace bp = boost::polygon;
  bp::voronoi_builder<std::int32_t> builder;
  for (const auto& [ix, iy] : int_seeds) builder.insert_point(ix, iy);
  bp::voronoi_diagram<double> diagram;
  builder.construct(&diagram);

  const double far_len = 32.0 * domain.diameter();
  const double dedupe_tol = 1e-12 * domain.diameter();
  std::vector<std::vector<Point2>> cells(int_seeds.size());

  for (const auto& cell : diagram.cells()) {
    const std::size_t self = cell.source_index();
    const Point2 p1 = frame.to_world(int_seeds[self].first, int_seeds[self].second);
    std::vector<Point2> poly;
    const auto* start = cell.incident_edge();
    const auto* edge = start;
    do {
      if (edge->vertex0()) {
        poly.push_back(frame.to_world(edge->vertex0()->x(), edge->vertex0()->y()));
      }
      if (!edge->vertex0() || !edge->vertex1()) {
        // Extend the infinite edge far beyond the domain; the bisector of
        // (p1, p2) runs along (p2 - p1) rotated by +90 degrees.
        const std::size_t other = edge->twin()->cell()->source_index();
        const Point2 p2 = frame.to_world(int_seeds[other].first, int_seeds[other].second);
        const Point2 mid = 0.5 * (p1 + p2);
        Point2 dir{p1.y - p2.y, p2.x - p1.x};
        const double len = norm(dir);
        if (len == 0.0) { edge = edge->next(); continue; }
        dir = (far_len / len) * dir;
        if (!edge->vertex0()) {
          const Point2 from = edge->vertex1() ? frame.to_world(edge->vertex1()->x(), edge->vertex1()->y()) : mid;
          poly.push_back(from - dir);
        }
        if (!edge->vertex1()) {
          const Point2 from = edge->vertex0() ? frame.to_world(edge->vertex0()->x(), edge->vertex0()->y()) : mid;
          poly.push_back(from + dir);
        }
      }
      edge = edge->next();
    } while (edge != start);
    cells[self] = domain.clip_cell(poly, dedupe_tol);
  }
  return cells;
}

class VertexPool {
 public:
  VertexPool(double tol) : tol_(tol), bucket_(2.0 * tol) {}

  int insert(Point2 p) {
    const std::int64_t bx = static_cast<std::int64_t>(std::floor(p.x / bucket_));
    const std::int64_t by = static_cast<std::int64_t>(std::floor(p.y / bucket_));
    int best = -1;
    double best_d = tol_;
    for (std::int64_t dx = -1; dx <= 1; ++dx) {
      for (std::int64_t dy = -1; dy <= 1; ++dy) {
        const auto it = buckets_.find({bx + dx, by + dy});
        if (it == buckets_.end()) continue;
        for (const int id : it->second) {
          const double d = distance(points_[id], p);
          if (d <= best_d) {
            best_d = d;
            best = id;
          }
        }
      }
    }
    if (best >= 0) return best;
    const int id = static_cast<int>(points_.size());
    points_.push_back(p);
    buckets_[{bx, by}].push_back(id);
    return id;
  }

  std::vector<Point2> take() { return std::move(points_); }

 private:
  double tol_;
  double bucket_;
  std::vector<Point2> points_;
  std::unordered_map<std::pair<std::int64_t, std::int64_t>, std::vector<int>, IntPairHash> buckets_;
};

std::vector<Point2> initial_seeds(const DomainDescriptor& domain, const VoronoiOptions& options,
                                  std::mt19937_64& rng) {
  const Point2 lo = domain.bbox_lo(), hi = domain.bbox_hi();
  std::vector<Point2> seeds;
  seeds.reserve(options.target_seeds);
  if (options.mode == SeedMode::Random) {
    std::uniform_real_distribution<double> ux(lo.x, hi.x), uy(lo.y, hi.y);
    while (static_cast<int>(seeds.size()) < options.target_seeds) {
      const Point2 p{ux(rng), uy(rng)};
      if (domain.contains(p)) seeds.push_back(p);
    }
    return seeds;
  }
  // Jittered lattice with spacing set by the seed density over the domain.
  const double spacing = std::sqrt(domain.area() / options.target_seeds);
  const int nx = std::max(1, static_cast<int>(std::ceil((hi.x - lo.x) / spacing)));
  const int ny = std::max(1, static_cast<int>(std::ceil((hi.y - lo.y) / spacing)));
  const double sx = (hi.x - lo.x) / nx;
  const double sy = (hi.y - lo.y) / ny;
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Point2 base{lo.x + (i + 0.5) * sx, lo.y + (j + 0.5) * sy};
      const Point2 p{base.x + jitter(rng) * sx, base.y + jitter(rng) * sy};
      if (domain.contains(p)) {
        seeds.push_back(p);
      } else if (domain.contains(base)) {
        seeds.push_back(base);
      }
    }
  }
  return seeds;
}

}  // namespace

PolygonalMesh generate_voronoi(const DomainDescriptor& domain, const VoronoiOptions& options) {
  if (options.target_seeds < 4) {
    throw MeshError("generate_voronoi: target_seeds must be at least 4");
  }
  if (options.mode == SeedMode::Uniform && options.lloyd_iterations < 1) {
    throw MeshError("generate_voronoi: uniform mode needs lloyd_iterations >= 1");
  }

  const IntFrame frame(domain);
  std::mt19937_64 rng(options.rng_seed ^ 0x5851F42D4C957F2DULL);
  std::vector<Point2> seeds = initial_seeds(domain, options, rng);
  if (static_cast<int>(seeds.size()) < 4) {
    throw MeshError("generate_voronoi: seed placement produced fewer than 4 seeds");
  }
  auto int_seeds = snap_seeds(seeds, frame);

  const double sliver_area = 1e-14 * domain.area();

  if (options.mode == SeedMode::Uniform) {
    double h_estimate = domain.diameter();
    for (int sweep = 0; sweep < options.lloyd_iterations; ++sweep) {
      const auto cells = clipped_cells(int_seeds, domain, frame);
      std::vector<Point2> moved;
      moved.reserve(int_seeds.size());
      double movement = 0.0;
      double h_new = 0.0;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].size() < 3) continue;  // absorbed by neighbors
        if (polygon_signed_area(cells[i]) < sliver_area) continue;
        const CellGeometry g = cell_geometry(cells[i]);
        const Point2 old = frame.to_world(int_seeds[i].first, int_seeds[i].second);
        movement = std::max(movement, distance(g.centroid, old));
        h_new = std::max(h_new, g.diameter);
        moved.push_back(g.centroid);
      }
      if (static_cast<int>(moved.size()) < 4) {
        throw MeshError("generate_voronoi: Lloyd relaxation collapsed the seed set");
      }
      int_seeds = snap_seeds(moved, frame);
      h_estimate = h_new;
      if (movement < 1e-8 * h_estimate || movement < 4.0 * frame.snap_resolution()) break;
    }
  }

  // Final diagram; degenerate cells surrender their seed to the neighbors.
  std::vector<std::vector<Point2>> cells;
  for (int attempt = 0;; ++attempt) {
    cells = clipped_cells(int_seeds, domain, frame);
    std::vector<std::pair<std::int32_t, std::int32_t>> kept;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() >= 3 && polygon_signed_area(cells[i]) >= sliver_area) {
        kept.push_back(int_seeds[i]);
      }
    }
    if (kept.size() == int_seeds.size()) break;
    if (attempt >= 3 || kept.size() < 4) {
      throw MeshError("generate_voronoi: degenerate Voronoi cell persisted after reseeding (" +
                      std::to_string(int_seeds.size() - kept.size()) + " slivers)");
    }
    int_seeds = std::move(kept);
  }

  VertexPool pool(1e-10 * domain.diameter());
  std::vector<std::vector<int>> cell_ids;
  cell_ids.reserve(cells.size());
  for (const auto& poly : cells) {
    std::vector<int> ids;
    ids.reserve(poly.size());
    for (const Point2 p : poly) {
      const int id = pool.insert(p);
      if (ids.empty() || ids.back() != id) ids.push_back(id);
    }
    while (ids.size() > 1 && ids.front() == ids.back()) ids.pop_back();
    if (ids.size() < 3) {
      throw MeshError("generate_voronoi: cell degenerated during vertex unification");
    }
    cell_ids.push_back(std::move(ids));
  }

  PolygonalMesh mesh(pool.take(), std::move(cell_ids));
  mesh.validate(&domain);
  return mesh;
}

}  // namespace vem
