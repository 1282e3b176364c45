#pragma once

#include "epsnet/rational.hpp"

#include <memory>
#include <optional>
#include <variant>
#include <vector>

namespace epsnet {

using Point = std::vector<Scalar>;

struct PointSet {
    int dim = 0;
    std::vector<Point> points;
    bool general_position = false;

    PointSet() = default;
    PointSet(int d, std::vector<Point> pts, bool gp = false);

    std::size_t size() const { return points.size(); }
    const Point& operator[](std::size_t i) const { return points[i]; }
};

// Throws InvalidInput when dimensions or sizes are inconsistent, and when the
// general position flag is set but the check fails.
void validate(const PointSet& P);

// No d+1 points on a common hyperplane (only checked for d <= 3).
bool in_general_position(const PointSet& P);
bool distinct_coordinates(const PointSet& P, int axis);
bool distinct_coordinates(const PointSet& P);

struct Hyperplane {
    std::vector<Scalar> normal;
    Scalar offset;

    // sign of <normal,x> - offset
    int side(const Point& x) const;
};

struct Halfspace {
    std::vector<Scalar> normal;
    Scalar offset;
    bool closed = true;

    bool contains(const Point& x) const;
};

struct HPolytope {
    int dim = 0;
    std::vector<Halfspace> halfspaces;
    std::optional<Point> witness;

    bool contains(const Point& x) const;
};

struct SubsetHull {
    std::shared_ptr<const PointSet> base;
    std::vector<std::size_t> indices;

    int dim() const { return base->dim; }
    std::vector<Point> points() const;
};

using ConvexSet = std::variant<HPolytope, SubsetHull>;

int dim_of(const ConvexSet& c);

HPolytope axis_box(const Point& lo, const Point& hi);
HPolytope halfspace_polytope(int dim, std::vector<Halfspace> hs);

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

// Convex-combination membership, decided exactly. With strict=true the point
// must lie in the interior of the hull (so a lower-dimensional hull has none).
bool point_in_hull(const Point& q, const SubsetHull& hull, bool strict = false);
bool point_in_hull(const Point& q, const std::vector<Point>& pts, bool strict = false);

// Witness point in the common intersection, or nullopt if it is empty.
std::optional<Point> polytopes_intersect(const std::vector<ConvexSet>& family);

Hyperplane halving_hyperplane(const PointSet& P, int axis);

Hyperplane split_at_count(const PointSet& P, int axis, std::size_t below_count,
                          const std::optional<HPolytope>& restrict_to = std::nullopt);

// Affine rank of a point list (dimension of its affine hull), -1 for empty.
int affine_rank(const std::vector<Point>& pts);

}  // namespace epsnet
