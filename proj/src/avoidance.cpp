#include "epsnet/hull2d.hpp"
#include "epsnet/ranges.hpp"

#include <algorithm>
#include <bit>

namespace epsnet {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask(1) << i; }

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point cross3(const Point& u, const Point& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

bool is_zero(const Point& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

// same-direction rays from q, used when everything is collinear with q
void ray_candidates(const std::vector<Point>& P, const Point& q, std::vector<Mask>& out) {
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (P[i] == q) continue;
        Point u = sub(P[i], q);
        Mask m = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (P[j] == q) continue;
            Point v = sub(P[j], q);
            bool parallel = true;
            for (std::size_t a = 0; a < u.size() && parallel; ++a)
                for (std::size_t b = a + 1; b < u.size() && parallel; ++b)
                    parallel = u[a] * v[b] == u[b] * v[a];
            if (parallel && sgn(dot(u, v)) > 0) m |= bit(j);
        }
        out.push_back(m);
    }
}

void planar_candidates(const std::vector<Point>& P, const Point& q, std::vector<Mask>& out) {
    planar::AvoidMasks am(P, q);
    for (std::size_t i = 0; i < P.size(); ++i)
        if (!(am.coincide & bit(i))) out.push_back(am.mask[i]);
}

void spatial_candidates(const std::vector<Point>& P, const Point& q, std::vector<Mask>& out) {
    const std::size_t n = P.size();
    std::vector<Point> rel(n);
    for (std::size_t i = 0; i < n; ++i) rel[i] = sub(P[i], q);
    for (std::size_t a = 0; a < n; ++a) {
        if (is_zero(rel[a])) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
            Point nrm = cross3(rel[a], rel[b]);
            if (is_zero(nrm)) continue;
            Mask pos = 0, neg = 0;
            std::vector<std::size_t> on;
            for (std::size_t j = 0; j < n; ++j) {
                int s = sgn(dot(nrm, rel[j]));
                if (s > 0)
                    pos |= bit(j);
                else if (s < 0)
                    neg |= bit(j);
                else
                    on.push_back(j);
            }
            // project the in-plane points by dropping a coordinate where the normal is nonzero
            std::size_t drop = 0;
            while (sgn(nrm[drop]) == 0) ++drop;
            std::vector<Point> flat;
            for (auto j : on) {
                Point f;
                for (std::size_t c = 0; c < 3; ++c)
                    if (c != drop) f.push_back(P[j][c]);
                flat.push_back(std::move(f));
            }
            Point qf;
            for (std::size_t c = 0; c < 3; ++c)
                if (c != drop) qf.push_back(q[c]);
            std::vector<Mask> local;
            planar_candidates(flat, qf, local);
            local.push_back(0);
            for (Mask lm : local) {
                Mask lifted = 0;
                for (std::size_t k = 0; k < on.size(); ++k)
                    if (lm & bit(k)) lifted |= bit(on[k]);
                out.push_back(pos | lifted);
                out.push_back(neg | lifted);
            }
        }
    }
    ray_candidates(P, q, out);
}

std::vector<Mask> keep_maximal(std::vector<Mask> v) {
    std::sort(v.begin(), v.end(), [](Mask a, Mask b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::vector<Mask> out;
    for (Mask m : v) {
        bool dominated = false;
        for (Mask o : out)
            if ((m & ~o) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) out.push_back(m);
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> separable_candidates(const PointSet& P, const Point& q) {
    if (P.size() > 64) throw InvalidInput("avoidance oracle supports at most 64 points");
    if (static_cast<int>(q.size()) != P.dim) throw InvalidInput("dimension mismatch in avoidance oracle");
    std::vector<Mask> out;
    switch (P.dim) {
        case 1: {
            Mask lo = 0, hi = 0;
            for (std::size_t i = 0; i < P.size(); ++i) {
                if (P[i][0] < q[0]) lo |= bit(i);
                if (P[i][0] > q[0]) hi |= bit(i);
            }
            out = {lo, hi};
            break;
        }
        case 2:
            planar_candidates(P.points, q, out);
            break;
        case 3:
            spatial_candidates(P.points, q, out);
            break;
        default:
            throw InvalidInput("avoidance oracle supports d <= 3");
    }
    return keep_maximal(std::move(out));
}

std::size_t max_subset_avoiding(const PointSet& P, const std::vector<Point>& avoid_in) {
    if (avoid_in.empty()) return P.size();
    std::vector<Point> avoid = avoid_in;
    std::sort(avoid.begin(), avoid.end());
    avoid.erase(std::unique(avoid.begin(), avoid.end()), avoid.end());

    std::vector<std::vector<Mask>> cands;
    for (const auto& q : avoid) {
        cands.push_back(separable_candidates(P, q));
        if (cands.back().empty()) return 0;
    }
    int best = 0;
    // depth-first over one candidate per avoided point, pruned by popcount
    auto dfs = [&](auto&& self, std::size_t level, Mask acc) -> void {
        if (std::popcount(acc) <= best) return;
        if (level == cands.size()) {
            best = std::popcount(acc);
            return;
        }
        for (Mask m : cands[level]) self(self, level + 1, acc & m);
    };
    Mask all = P.size() == 64 ? ~Mask(0) : bit(P.size()) - 1;
    dfs(dfs, 0, all);
    return static_cast<std::size_t>(best);
}

}  // namespace epsnet
