#include "vem/domain.hpp"

#include <algorithm>
#include <cmath>

namespace vem {

DomainDescriptor DomainDescriptor::rectangle(Point2 lo, Point2 hi) {
  if (!(hi.x > lo.x) || !(hi.y > lo.y)) {
    throw GeometryError("rectangle domain: hi must be strictly greater than lo");
  }
  DomainDescriptor d;
  d.kind_ = DomainKind::Rectangle;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

DomainDescriptor DomainDescriptor::disk(Point2 center, double radius) {
  if (!(radius > 0.0)) throw GeometryError("disk domain: radius must be positive");
  DomainDescriptor d;
  d.kind_ = DomainKind::Disk;
  d.center_ = center;
  d.radius_ = radius;
  return d;
}

DomainDescriptor DomainDescriptor::disk_sector(Point2 center, double radius, double chord_x) {
  if (!(radius > 0.0)) throw GeometryError("disk sector domain: radius must be positive");
  if (!(chord_x > center.x - radius) || !(chord_x < center.x + radius)) {
    throw GeometryError("disk sector domain: chord must cut the disk");
  }
  DomainDescriptor d;
  d.kind_ = DomainKind::DiskSector;
  d.center_ = center;
  d.radius_ = radius;
  d.chord_x_ = chord_x;
  return d;
}

double DomainDescriptor::area() const {
  switch (kind_) {
    case DomainKind::Rectangle:
      return (hi_.x - lo_.x) * (hi_.y - lo_.y);
    case DomainKind::Disk:
      return M_PI * radius_ * radius_;
    case DomainKind::DiskSector: {
      // Circular segment beyond the chord x = chord_x.
      const double c = chord_x_ - center_.x;
      const double alpha = std::acos(c / radius_);
      return radius_ * radius_ * alpha - c * std::sqrt(radius_ * radius_ - c * c);
    }
  }
  return 0.0;
}

Point2 DomainDescriptor::bbox_lo() const {
  switch (kind_) {
    case DomainKind::Rectangle:
      return lo_;
    case DomainKind::Disk:
      return {center_.x - radius_, center_.y - radius_};
    case DomainKind::DiskSector:
      return {chord_x_, center_.y - std::sqrt(radius_ * radius_ - (chord_x_ - center_.x) * (chord_x_ - center_.x))};
  }
  return {};
}

Point2 DomainDescriptor::bbox_hi() const {
  switch (kind_) {
    case DomainKind::Rectangle:
      return hi_;
    case DomainKind::Disk:
      return {center_.x + radius_, center_.y + radius_};
    case DomainKind::DiskSector:
      return {center_.x + radius_, center_.y + std::sqrt(radius_ * radius_ - (chord_x_ - center_.x) * (chord_x_ - center_.x))};
  }
  return {};
}

double DomainDescriptor::diameter() const {
  const Point2 d = bbox_hi() - bbox_lo();
  return norm(d);
}

bool DomainDescriptor::contains(Point2 p, double tol) const {
  switch (kind_) {
    case DomainKind::Rectangle:
      return p.x >= lo_.x - tol && p.x <= hi_.x + tol && p.y >= lo_.y - tol && p.y <= hi_.y + tol;
    case DomainKind::Disk:
      return distance(p, center_) <= radius_ + tol;
    case DomainKind::DiskSector:
      return distance(p, center_) <= radius_ + tol && p.x >= chord_x_ - tol;
  }
  return false;
}

double DomainDescriptor::boundary_distance(Point2 p) const {
  switch (kind_) {
    case DomainKind::Rectangle: {
      const double dx = std::min(std::abs(p.x - lo_.x), std::abs(p.x - hi_.x));
      const double dy = std::min(std::abs(p.y - lo_.y), std::abs(p.y - hi_.y));
      return std::min(dx, dy);
    }
    case DomainKind::Disk:
      return std::abs(distance(p, center_) - radius_);
    case DomainKind::DiskSector:
      return std::min(std::abs(distance(p, center_) - radius_), std::abs(p.x - chord_x_));
  }
  return 0.0;
}

std::vector<Point2> DomainDescriptor::clip_cell(std::span<const Point2> poly, double tol) const {
  std::vector<Point2> cur(poly.begin(), poly.end());
  if (cur.size() >= 3 && polygon_signed_area(cur) < 0.0) {
    std::reverse(cur.begin(), cur.end());
  }
  switch (kind_) {
    case DomainKind::Rectangle:
      cur = clip_half_plane(cur, {1.0, 0.0}, hi_.x);
      cur = clip_half_plane(cur, {-1.0, 0.0}, -lo_.x);
      cur = clip_half_plane(cur, {0.0, 1.0}, hi_.y);
      cur = clip_half_plane(cur, {0.0, -1.0}, -lo_.y);
      break;
    case DomainKind::Disk:
      cur = clip_circle(cur, center_, radius_);
      break;
    case DomainKind::DiskSector:
      cur = clip_half_plane(cur, {-1.0, 0.0}, -chord_x_);
      cur = clip_circle(cur, center_, radius_);
      break;
  }
  cur = dedupe_ring(cur, tol);
  if (cur.size() < 3) cur.clear();
  return cur;
}

}  // namespace vem
