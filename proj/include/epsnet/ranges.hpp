#pragma once

#include "epsnet/geometry.hpp"

#include <cstdint>

namespace epsnet {

struct BoxRange {
    std::vector<Scalar> lo, hi;  // closed intervals per axis

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const Point& p) const;
    HPolytope as_polytope() const { return axis_box(lo, hi); }
};

BoxRange bounding_box(const std::vector<Point>& pts);

struct EpsilonProfile {
    std::vector<Scalar> eps;

    EpsilonProfile() = default;
    explicit EpsilonProfile(std::vector<Scalar> e);
    std::size_t size() const { return eps.size(); }
    const Scalar& operator[](std::size_t i) const { return eps[i]; }
    // smallest count that makes a range heavy at level i (0-based): floor(eps n) + 1
    long long threshold(std::size_t i, long long n) const;
};

struct WeightedNet {
    std::vector<Point> points;
    EpsilonProfile profile;
};

enum class RangeSpaceKind { ConvexSets, AxisParallelBoxes };

std::size_t count_in_box(const PointSet& P, const BoxRange& b);

// Rank-space counting structure for repeated queries. Counting is a scan over
// the points whose first coordinate lies in range, located by binary search.
class BoxCounter {
public:
    explicit BoxCounter(const PointSet& P);
    std::size_t count(const BoxRange& b) const;

private:
    int dim_;
    std::vector<Point> by_x_;
    std::vector<Scalar> xs_;
};

// All boxes whose facets pass through point coordinates and that contain at
// least min_count points. Per axis the distinct coordinates are sorted and
// boxes are produced in lexicographic order of (lo_0, hi_0, lo_1, hi_1, ...)
// indices.
class CanonicalBoxStream {
public:
    CanonicalBoxStream(const PointSet& P, std::size_t min_count);
    std::optional<BoxRange> next();

private:
    bool advance(std::size_t from);
    std::size_t count_current() const;

    const PointSet& P_;
    std::size_t min_count_;
    std::vector<std::vector<Scalar>> coords_;
    std::vector<std::size_t> lo_, hi_;
    bool started_ = false, done_ = false;
};

// All t-subsets of P in lexicographic order.
class SubsetHullStream {
public:
    SubsetHullStream(std::shared_ptr<const PointSet> P, std::size_t t);
    std::optional<SubsetHull> next();

private:
    std::shared_ptr<const PointSet> P_;
    std::vector<std::size_t> idx_;
    bool done_ = false, started_ = false;
};

inline SubsetHullStream minimal_convex_ranges(std::shared_ptr<const PointSet> P, std::size_t t) {
    return SubsetHullStream(std::move(P), t);
}

inline CanonicalBoxStream enumerate_canonical_boxes(const PointSet& P, std::size_t min_count) {
    return CanonicalBoxStream(P, min_count);
}

// Largest |S|, S a subset of P, such that conv(S) contains none of the avoided
// points. Exact for d <= 3.
std::size_t max_subset_avoiding(const PointSet& P, const std::vector<Point>& avoid);

// Candidate separating sets: every maximal subset of P strictly separable from
// q is contained in one of the returned bitmasks (n <= 64, d <= 3). Each mask
// is itself separable from q.
std::vector<std::uint64_t> separable_candidates(const PointSet& P, const Point& q);

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

}  // namespace epsnet
