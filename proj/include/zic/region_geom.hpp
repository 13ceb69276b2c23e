#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "zic/errors.hpp"

namespace zic {

struct RatePair {
  double r1 = 0;
  double r2 = 0;
};

// a1*r1 + a2*r2 <= b with a1, a2 >= 0, not both zero, b >= 0.
struct Constraint {
  double a1 = 0;
  double a2 = 0;
  double b = 0;
};

// Intersection of the constraints with the nonnegative quadrant.
// Always contains (0, 0); must be bounded in both coordinates.
struct RateRegion {
  std::vector<Constraint> constraints;
};

namespace geom {

inline constexpr double kFeasTol = 1e-9;   // feasibility slack
inline constexpr double kDedupTol = 1e-9;  // vertex coincidence radius

inline void validate(const RateRegion& r) {
  bool caps_r1 = false, caps_r2 = false;
  for (const Constraint& c : r.constraints) {
    if (!std::isfinite(c.a1) || !std::isfinite(c.a2) || !std::isfinite(c.b))
      throw geometry_error("constraint coefficients must be finite");
    if (c.a1 < 0 || c.a2 < 0 || (c.a1 == 0 && c.a2 == 0))
      throw geometry_error("constraint normal must be nonnegative and nonzero");
    if (c.b < 0) throw geometry_error("constraint bound must be nonnegative");
    if (c.a1 > 0) caps_r1 = true;
    if (c.a2 > 0) caps_r2 = true;
  }
  if (!caps_r1 || !caps_r2) throw geometry_error("region is unbounded");
}

}  // namespace geom

inline bool contains(const RateRegion& r, const RatePair& p) {
  geom::validate(r);
  if (p.r1 < -geom::kFeasTol || p.r2 < -geom::kFeasTol) return false;
  for (const Constraint& c : r.constraints)
    if (c.a1 * p.r1 + c.a2 * p.r2 > c.b + geom::kFeasTol) return false;
  return true;
}

inline RateRegion intersect(const RateRegion& a, const RateRegion& b) {
  geom::validate(a);
  geom::validate(b);
  RateRegion out = a;
  out.constraints.insert(out.constraints.end(), b.constraints.begin(), b.constraints.end());
  return out;
}

// All extreme points, counterclockwise, starting at (0, 0). (0, 0) is always
// a vertex because every bound is nonnegative. Pairwise line intersections
// (constraints plus both axes) filtered by feasibility, then deduplicated.
inline std::vector<RatePair> vertices(const RateRegion& r) {
  geom::validate(r);
  std::vector<Constraint> lines = r.constraints;
  lines.push_back({1, 0, 0});  // r1 >= 0 boundary
  lines.push_back({0, 1, 0});  // r2 >= 0 boundary

  std::vector<RatePair> pts;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double det = lines[i].a1 * lines[j].a2 - lines[i].a2 * lines[j].a1;
      if (std::abs(det) < 1e-12) continue;
      const double x = (lines[i].b * lines[j].a2 - lines[j].b * lines[i].a2) / det;
      const double y = (lines[i].a1 * lines[j].b - lines[j].a1 * lines[i].b) / det;
      if (!contains(r, {x, y})) continue;
      bool dup = false;
      for (const RatePair& q : pts)
        if (std::abs(q.r1 - x) <= geom::kDedupTol && std::abs(q.r2 - y) <= geom::kDedupTol) {
          dup = true;
          break;
        }
      if (!dup) pts.push_back({x, y});
    }
  }

  if (pts.size() > 2) {
    double cx = 0, cy = 0;
    for (const RatePair& p : pts) cx += p.r1, cy += p.r2;
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const RatePair& a, const RatePair& b) {
      const double ta = std::atan2(a.r2 - cy, a.r1 - cx);
      const double tb = std::atan2(b.r2 - cy, b.r1 - cx);
      if (ta != tb) return ta < tb;
      return a.r1 * a.r1 + a.r2 * a.r2 < b.r1 * b.r1 + b.r2 * b.r2;
    });
  }

  std::size_t origin = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].r1 * pts[i].r1 + pts[i].r2 * pts[i].r2 <
        pts[origin].r1 * pts[origin].r1 + pts[origin].r2 * pts[origin].r2)
      origin = i;
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(origin), pts.end());
  return pts;
}

inline double area(const RateRegion& r) {
  const std::vector<RatePair> v = vertices(r);
  if (v.size() < 3) return 0.0;
  double twice = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const RatePair& p = v[i];
    const RatePair& q = v[(i + 1) % v.size()];
    twice += p.r1 * q.r2 - q.r1 * p.r2;
  }
  return std::abs(twice) / 2.0;
}

// Convexity makes vertex containment sufficient.
inline bool is_subset(const RateRegion& a, const RateRegion& b) {
  geom::validate(b);
  for (const RatePair& p : vertices(a))
    if (!contains(b, p)) return false;
  return true;
}

}  // namespace zic
