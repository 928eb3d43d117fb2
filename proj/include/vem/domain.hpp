#pragma once

#include <vector>

#include "vem/geometry.hpp"

namespace vem {

enum class DomainKind { Rectangle, Disk, DiskSector };

/// Convex computational domain: an axis-aligned rectangle, a disk, or the
/// part of a disk cut off by a vertical chord (x > chord_x). Curved parts
/// are handled by clipping cells against the exact circle and replacing
/// each boundary arc with its chord; chord endpoints lie on the circle.
class DomainDescriptor {
 public:
  static DomainDescriptor rectangle(Point2 lo, Point2 hi);
  static DomainDescriptor disk(Point2 center, double radius);
  static DomainDescriptor disk_sector(Point2 center, double radius, double chord_x);

  DomainKind kind() const { return kind_; }
  bool curved() const { return kind_ != DomainKind::Rectangle; }

  Point2 rect_lo() const { return lo_; }
  Point2 rect_hi() const { return hi_; }
  Point2 center() const { return center_; }
  double radius() const { return radius_; }
  double chord_x() const { return chord_x_; }

  /// Exact area of the (curved) domain.
  double area() const;

  Point2 bbox_lo() const;
  Point2 bbox_hi() const;
  double diameter() const;

  bool contains(Point2 p, double tol = 0.0) const;

  /// Distance from p to the domain boundary (0 only on the boundary itself
  /// up to floating point; used to audit boundary vertex placement).
  double boundary_distance(Point2 p) const;

  /// Clips a convex polygon (any orientation) to the domain. Straight
  /// boundary pieces are exact half-plane cuts; circular pieces become
  /// per-cell chords. The result is CCW, or empty if the intersection is
  /// degenerate. `tol` collapses near-duplicate consecutive vertices.
  std::vector<Point2> clip_cell(std::span<const Point2> poly, double tol) const;

 private:
  DomainKind kind_ = DomainKind::Rectangle;
  Point2 lo_, hi_;        // rectangle
  Point2 center_;         // disk / sector
  double radius_ = 0.0;   // disk / sector
  double chord_x_ = 0.0;  // sector
};

}  // namespace vem
