#include "epsnet/hull2d.hpp"

#include <algorithm>
#include <bit>

namespace epsnet::planar {

Scalar cross(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && sgn(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool in_convex_polygon(const Point& q, const std::vector<Point>& poly) {
    if (poly.empty()) return false;
    if (poly.size() == 1) return q == poly[0];
    if (poly.size() == 2) {
        if (sgn(cross(poly[0], poly[1], q)) != 0) return false;
        for (int a = 0; a < 2; ++a) {
            Scalar lo = std::min(poly[0][a], poly[1][a]), hi = std::max(poly[0][a], poly[1][a]);
            if (q[a] < lo || q[a] > hi) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (sgn(cross(poly[i], poly[(i + 1) % poly.size()], q)) < 0) return false;
    return true;
}

std::vector<Halfspace> hull_halfplanes(const std::vector<Point>& poly) {
    std::vector<Halfspace> out;
    auto edge = [&](const Point& a, const Point& b) {
        // left of a->b:  cross(a,b,x) >= 0  <=>  (b1-a1) x0 + (a0-b0) x1 <= (b1-a1) a0 + (a0-b0) a1
        Halfspace h;
        h.normal = {b[1] - a[1], a[0] - b[0]};
        h.offset = h.normal[0] * a[0] + h.normal[1] * a[1];
        out.push_back(std::move(h));
    };
    if (poly.size() == 1) {
        for (int a = 0; a < 2; ++a)
            for (int s : {1, -1}) {
                Halfspace h;
                h.normal = {Scalar(0), Scalar(0)};
                h.normal[a] = s;
                h.offset = s * poly[0][a];
                out.push_back(std::move(h));
            }
        return out;
    }
    if (poly.size() == 2) {
        edge(poly[0], poly[1]);
        edge(poly[1], poly[0]);
        for (int e = 0; e < 2; ++e) {
            const Point& a = poly[e];
            const Point& b = poly[1 - e];
            Halfspace h;  // (b - a).x <= (b - a).b
            h.normal = {b[0] - a[0], b[1] - a[1]};
            h.offset = h.normal[0] * b[0] + h.normal[1] * b[1];
            out.push_back(std::move(h));
        }
        return out;
    }
    for (std::size_t i = 0; i < poly.size(); ++i) edge(poly[i], poly[(i + 1) % poly.size()]);
    return out;
}

std::vector<Point> clip(const std::vector<Point>& poly, const Halfspace& h) {
    std::vector<Point> out;
    const std::size_t m = poly.size();
    if (m == 0) return out;
    auto val = [&](const Point& p) -> Scalar { return h.normal[0] * p[0] + h.normal[1] * p[1] - h.offset; };
    if (m == 1) {
        if (sgn(val(poly[0])) <= 0) out.push_back(poly[0]);
        return out;
    }
    std::vector<Scalar> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = val(poly[i]);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t j = (i + 1) % m;
        bool in_i = sgn(v[i]) <= 0, in_j = sgn(v[j]) <= 0;
        if (in_i) out.push_back(poly[i]);
        if (in_i != in_j && sgn(v[i]) != 0 && sgn(v[j]) != 0) {
            Scalar t = v[i] / (v[i] - v[j]);
            out.push_back({poly[i][0] + t * (poly[j][0] - poly[i][0]), poly[i][1] + t * (poly[j][1] - poly[i][1])});
        }
        if (m == 2) break;  // a segment has one edge
    }
    if (m == 2 && sgn(v[1]) <= 0) out.push_back(poly[1]);
    std::vector<Point> dedup;
    for (auto& p : out)
        if (dedup.empty() || dedup.back() != p) dedup.push_back(std::move(p));
    while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
    if (dedup.size() > 2) dedup = convex_hull(dedup);
    return dedup;
}

bool avoids(const std::vector<Point>& S, const Point& q) {
    if (S.empty()) return true;
    for (const auto& s : S)
        if (s == q) return false;
    for (const auto& s0 : S) {
        bool ok = true;
        for (const auto& s : S) {
            int c = sgn(cross(q, s0, s));
            if (c > 0) continue;
            if (c == 0) {
                Scalar dp = (s0[0] - q[0]) * (s[0] - q[0]) + (s0[1] - q[1]) * (s[1] - q[1]);
                if (sgn(dp) > 0) continue;
            }
            ok = false;
            break;
        }
        if (ok) return true;
    }
    return false;
}

AvoidMasks::AvoidMasks(const std::vector<Point>& P, const Point& q) : mask(P.size(), 0) {
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (P[i] == q) {
            coincide |= std::uint64_t(1) << i;
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (P[j] == q) continue;
            int c = sgn(cross(q, P[i], P[j]));
            bool in = c > 0;
            if (c == 0) {
                Scalar dp = (P[i][0] - q[0]) * (P[j][0] - q[0]) + (P[i][1] - q[1]) * (P[j][1] - q[1]);
                in = sgn(dp) > 0;
            }
            if (in) mask[i] |= std::uint64_t(1) << j;
        }
    }
}

bool AvoidMasks::avoided_by(std::uint64_t S) const {
    if (S & coincide) return false;
    for (std::uint64_t rest = S; rest;) {
        int i = std::countr_zero(rest);
        rest &= rest - 1;
        if ((S & ~mask[i]) == 0) return true;
    }
    return S == 0;
}

Point centroid_of_vertices(const std::vector<Point>& poly) {
    Point c(poly.at(0).size(), Scalar(0));
    for (const auto& p : poly)
        for (std::size_t a = 0; a < c.size(); ++a) c[a] += p[a];
    for (auto& v : c) v /= static_cast<long>(poly.size());
    return c;
}

}  // namespace epsnet::planar
