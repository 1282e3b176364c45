#include "epsnet/geometry.hpp"

#include "epsnet/hull2d.hpp"
#include "epsnet/lp.hpp"

#include <algorithm>
#include <numeric>

namespace epsnet {

PointSet::PointSet(int d, std::vector<Point> pts, bool gp) : dim(d), points(std::move(pts)), general_position(gp) {
    validate(*this);
}

void validate(const PointSet& P) {
    if (P.dim < 1) throw InvalidInput("point set dimension must be positive");
    if (P.points.empty()) throw InvalidInput("point set is empty");
    for (std::size_t i = 0; i < P.points.size(); ++i)
        if (static_cast<int>(P.points[i].size()) != P.dim)
            throw InvalidInput("point " + std::to_string(i) + " has " + std::to_string(P.points[i].size()) +
                               " coordinates, expected " + std::to_string(P.dim));
    if (P.general_position) {
        if (!in_general_position(P)) throw InvalidInput("point set is not in general position");
        if (!distinct_coordinates(P)) throw InvalidInput("point set has repeated coordinates along an axis");
    }
}

Scalar dot(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int Hyperplane::side(const Point& x) const { return sgn(dot(normal, x) - offset); }

bool Halfspace::contains(const Point& x) const {
    Scalar v = dot(normal, x);
    return closed ? v <= offset : v < offset;
}

bool HPolytope::contains(const Point& x) const {
    for (const auto& h : halfspaces)
        if (!h.contains(x)) return false;
    return true;
}

std::vector<Point> SubsetHull::points() const {
    std::vector<Point> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(base->points.at(i));
    return out;
}

int dim_of(const ConvexSet& c) {
    return std::visit([](const auto& s) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, HPolytope>)
            return s.dim;
        else
            return s.dim();
    }, c);
}

HPolytope axis_box(const Point& lo, const Point& hi) {
    HPolytope P;
    P.dim = static_cast<int>(lo.size());
    for (int a = 0; a < P.dim; ++a) {
        Halfspace up, down;
        up.normal.assign(P.dim, Scalar(0));
        down.normal.assign(P.dim, Scalar(0));
        up.normal[a] = 1;
        up.offset = hi[a];
        down.normal[a] = -1;
        down.offset = -lo[a];
        P.halfspaces.push_back(std::move(up));
        P.halfspaces.push_back(std::move(down));
    }
    bool nonempty = true;
    for (int a = 0; a < P.dim; ++a)
        if (lo[a] > hi[a]) nonempty = false;
    if (nonempty) P.witness = lo;
    return P;
}

HPolytope halfspace_polytope(int dim, std::vector<Halfspace> hs) {
    HPolytope P;
    P.dim = dim;
    P.halfspaces = std::move(hs);
    return P;
}

int affine_rank(const std::vector<Point>& pts) {
    if (pts.empty()) return -1;
    std::vector<std::vector<Scalar>> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Scalar> r(pts[0].size());
        for (std::size_t a = 0; a < r.size(); ++a) r[a] = pts[i][a] - pts[0][a];
        m.push_back(std::move(r));
    }
    int rank = 0;
    const std::size_t cols = pts[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
        std::size_t piv = m.size();
        for (std::size_t r = static_cast<std::size_t>(rank); r < m.size(); ++r)
            if (sgn(m[r][c]) != 0) {
                piv = r;
                break;
            }
        if (piv == m.size()) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        auto& pr = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || sgn(m[r][c]) == 0) continue;
            Scalar f = m[r][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * pr[k];
        }
        ++rank;
    }
    return rank;
}

bool in_general_position(const PointSet& P) {
    const std::size_t n = P.size();
    const std::size_t k = static_cast<std::size_t>(P.dim) + 1;
    if (n < k) {
        return affine_rank(P.points) == static_cast<int>(n) - 1;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<Point> sub(k);
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) sub[i] = P.points[idx[i]];
        if (affine_rank(sub) < P.dim) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool distinct_coordinates(const PointSet& P, int axis) {
    std::vector<Scalar> xs;
    xs.reserve(P.size());
    for (const auto& p : P.points) xs.push_back(p[axis]);
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

bool distinct_coordinates(const PointSet& P) {
    for (int a = 0; a < P.dim; ++a)
        if (!distinct_coordinates(P, a)) return false;
    return true;
}

namespace {

void check_dim(const Point& q, int d) {
    if (static_cast<int>(q.size()) != d)
        throw InvalidInput("dimension mismatch: point has " + std::to_string(q.size()) + " coordinates, expected " +
                           std::to_string(d));
}

}  // namespace

bool point_in_hull(const Point& q, const std::vector<Point>& pts, bool strict) {
    if (pts.empty()) return false;
    const int d = static_cast<int>(pts[0].size());
    check_dim(q, d);
    for (const auto& p : pts) check_dim(p, d);

    if (!strict && d == 2) return !planar::avoids(pts, q);
    if (d == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
        return strict ? ((*lo)[0] < q[0] && q[0] < (*hi)[0]) : ((*lo)[0] <= q[0] && q[0] <= (*hi)[0]);
    }
    if (strict && affine_rank(pts) < d) return false;

    // sum lambda = 1, sum lambda p = q, lambda >= 0 (or >= t > 0 when strict)
    const std::size_t m = pts.size();
    std::vector<LinearConstraint> rows;
    LinearConstraint sum{std::vector<Scalar>(m, Scalar(1)), Relation::Eq, Scalar(1)};
    rows.push_back(sum);
    for (int a = 0; a < d; ++a) {
        LinearConstraint r{std::vector<Scalar>(m), Relation::Eq, q[a]};
        for (std::size_t i = 0; i < m; ++i) r.coeffs[i] = pts[i][a];
        rows.push_back(std::move(r));
    }
    if (strict) {
        for (std::size_t i = 0; i < m; ++i) {
            LinearConstraint r{std::vector<Scalar>(m, Scalar(0)), Relation::Less, Scalar(0)};
            r.coeffs[i] = -1;
            rows.push_back(std::move(r));
        }
    }
    return find_feasible(m, rows, std::vector<bool>(m, true)).has_value();
}

bool point_in_hull(const Point& q, const SubsetHull& hull, bool strict) {
    if (hull.indices.empty()) throw InvalidInput("empty subset hull");
    return point_in_hull(q, hull.points(), strict);
}

namespace {

bool all_closed(const std::vector<ConvexSet>& family) {
    for (const auto& c : family)
        if (auto* hp = std::get_if<HPolytope>(&c))
            for (const auto& h : hp->halfspaces)
                if (!h.closed) return false;
    return true;
}

bool satisfies(const Point& x, const ConvexSet& c) {
    if (auto* hp = std::get_if<HPolytope>(&c)) return hp->contains(x);
    return point_in_hull(x, std::get<SubsetHull>(c), false);
}

std::optional<Point> intersect_planar(const std::vector<ConvexSet>& family) {
    std::vector<Point> region;
    bool bounded = false;
    std::vector<Halfspace> pending;
    for (const auto& c : family) {
        if (auto* sh = std::get_if<SubsetHull>(&c)) {
            auto poly = planar::convex_hull(sh->points());
            if (!bounded) {
                region = std::move(poly);
                bounded = true;
            } else {
                for (const auto& h : planar::hull_halfplanes(poly)) {
                    region = planar::clip(region, h);
                    if (region.empty()) return std::nullopt;
                }
            }
        } else {
            for (const auto& h : std::get<HPolytope>(c).halfspaces) pending.push_back(h);
        }
        if (bounded && region.empty()) return std::nullopt;
    }
    if (!bounded) return std::nullopt;  // caller handles the unbounded case by LP
    for (const auto& h : pending) {
        region = planar::clip(region, h);
        if (region.empty()) return std::nullopt;
    }
    return planar::centroid_of_vertices(region);
}

bool has_subset_hull(const std::vector<ConvexSet>& family) {
    for (const auto& c : family)
        if (std::holds_alternative<SubsetHull>(c)) return true;
    return false;
}

}  // namespace

std::optional<Point> polytopes_intersect(const std::vector<ConvexSet>& family) {
    if (family.empty()) throw InvalidInput("polytopes_intersect: empty family");
    const int d = dim_of(family[0]);
    for (const auto& c : family)
        if (dim_of(c) != d) throw InvalidInput("polytopes_intersect: dimension mismatch");
    for (const auto& c : family)
        if (auto* sh = std::get_if<SubsetHull>(&c); sh && sh->indices.empty())
            throw InvalidInput("polytopes_intersect: empty subset hull");

    if (family.size() == 1) {
        if (auto* hp = std::get_if<HPolytope>(&family[0]); hp && hp->witness && hp->contains(*hp->witness))
            return hp->witness;
    }
    if (d == 2 && all_closed(family) && has_subset_hull(family)) return intersect_planar(family);

    // LP over x (free) and one convex-combination block per subset hull
    std::size_t nv = static_cast<std::size_t>(d);
    std::vector<std::size_t> block_start;
    for (const auto& c : family) {
        block_start.push_back(nv);
        if (auto* sh = std::get_if<SubsetHull>(&c)) nv += sh->indices.size();
    }
    std::vector<bool> nonneg(nv, true);
    for (int a = 0; a < d; ++a) nonneg[static_cast<std::size_t>(a)] = false;

    std::vector<LinearConstraint> rows;
    for (std::size_t f = 0; f < family.size(); ++f) {
        if (auto* hp = std::get_if<HPolytope>(&family[f])) {
            for (const auto& h : hp->halfspaces) {
                LinearConstraint r{std::vector<Scalar>(nv, Scalar(0)), h.closed ? Relation::LessEq : Relation::Less,
                                   h.offset};
                for (int a = 0; a < d; ++a) r.coeffs[static_cast<std::size_t>(a)] = h.normal[static_cast<std::size_t>(a)];
                rows.push_back(std::move(r));
            }
        } else {
            const auto& sh = std::get<SubsetHull>(family[f]);
            const std::size_t b = block_start[f];
            LinearConstraint sum{std::vector<Scalar>(nv, Scalar(0)), Relation::Eq, Scalar(1)};
            for (std::size_t i = 0; i < sh.indices.size(); ++i) sum.coeffs[b + i] = 1;
            rows.push_back(std::move(sum));
            for (int a = 0; a < d; ++a) {
                LinearConstraint r{std::vector<Scalar>(nv, Scalar(0)), Relation::Eq, Scalar(0)};
                r.coeffs[static_cast<std::size_t>(a)] = -1;
                for (std::size_t i = 0; i < sh.indices.size(); ++i)
                    r.coeffs[b + i] = sh.base->points.at(sh.indices[i])[static_cast<std::size_t>(a)];
                rows.push_back(std::move(r));
            }
        }
    }
    auto sol = find_feasible(nv, rows, nonneg);
    if (!sol) return std::nullopt;
    Point x(sol->begin(), sol->begin() + d);
    for (const auto& c : family)
        if (!satisfies(x, c)) throw std::logic_error("polytopes_intersect: witness failed re-check");
    return x;
}

Hyperplane split_at_count(const PointSet& P, int axis, std::size_t below_count,
                          const std::optional<HPolytope>& restrict_to) {
    if (axis < 0 || axis >= P.dim) throw InvalidInput("axis out of range");
    std::vector<Scalar> xs;
    for (const auto& p : P.points)
        if (!restrict_to || restrict_to->contains(p)) xs.push_back(p[axis]);
    std::sort(xs.begin(), xs.end());
    if (std::adjacent_find(xs.begin(), xs.end()) != xs.end())
        throw InvalidInput("repeated coordinates along axis " + std::to_string(axis));
    if (below_count > xs.size())
        throw InvalidInput("cannot place " + std::to_string(below_count) + " of " + std::to_string(xs.size()) +
                           " points below a hyperplane");
    Hyperplane h;
    h.normal.assign(static_cast<std::size_t>(P.dim), Scalar(0));
    h.normal[static_cast<std::size_t>(axis)] = 1;
    if (xs.empty())
        h.offset = 0;
    else if (below_count == 0)
        h.offset = xs.front() - 1;
    else if (below_count == xs.size())
        h.offset = xs.back() + 1;
    else
        h.offset = (xs[below_count - 1] + xs[below_count]) / 2;
    return h;
}

Hyperplane halving_hyperplane(const PointSet& P, int axis) {
    if (!distinct_coordinates(P, axis)) throw InvalidInput("repeated coordinates along axis " + std::to_string(axis));
    return split_at_count(P, axis, P.size() / 2);
}

}  // namespace epsnet
