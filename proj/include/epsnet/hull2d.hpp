#pragma once

#include "epsnet/geometry.hpp"

#include <cstdint>

namespace epsnet::planar {

Scalar cross(const Point& o, const Point& a, const Point& b);

// Counter-clockwise hull without collinear vertices. Degenerate inputs give
// one vertex (all equal) or the two extreme points of a segment.
std::vector<Point> convex_hull(std::vector<Point> pts);

// Closed containment in a hull produced by convex_hull.
bool in_convex_polygon(const Point& q, const std::vector<Point>& poly);

// Closed half-planes a.x <= b describing a hull produced by convex_hull.
std::vector<Halfspace> hull_halfplanes(const std::vector<Point>& poly);

// Clips a convex vertex list (possibly a point or segment) by a.x <= b.
std::vector<Point> clip(const std::vector<Point>& poly, const Halfspace& h);

// q outside conv(S), decided by the angular criterion in O(|S|^2).
bool avoids(const std::vector<Point>& S, const Point& q);

// Bitmask form of the angular criterion for sets of at most 64 points:
// mask[s] holds the points s' with cross(s-q, s'-q) > 0, or collinear with
// s on the same side of q. S avoids q iff some s in S has S inside mask[s].
struct AvoidMasks {
    std::vector<std::uint64_t> mask;
    std::uint64_t coincide = 0;

    AvoidMasks(const std::vector<Point>& P, const Point& q);
    bool avoided_by(std::uint64_t S) const;
};

// Average of the vertices, a point of the (convex) polygon.
Point centroid_of_vertices(const std::vector<Point>& poly);

}  // namespace epsnet::planar
