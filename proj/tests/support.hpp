#pragma once

// Random instances and brute-force oracles shared by the tests. The oracles
// avoid the library's LP and planar code paths on purpose.

#include "epsnet/geometry.hpp"
#include "epsnet/ranges.hpp"
#include "epsnet/verification.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace testing_support {

using namespace epsnet;

inline Point pt(std::initializer_list<long> xs) {
    Point p;
    for (long x : xs) p.emplace_back(x);
    return p;
}

// n points with integer coordinates in [-range, range]; with distinct=true no
// two points share a coordinate on any axis.
inline PointSet random_points(std::mt19937_64& rng, std::size_t n, int d, long range = 1000, bool distinct = true) {
    std::vector<Point> pts(n, Point(static_cast<std::size_t>(d)));
    std::uniform_int_distribution<long> U(-range, range);
    for (int a = 0; a < d; ++a) {
        std::set<long> used;
        for (std::size_t i = 0; i < n; ++i) {
            long v = U(rng);
            while (distinct && used.count(v)) v = U(rng);
            used.insert(v);
            pts[i][static_cast<std::size_t>(a)] = v;
        }
    }
    return PointSet(d, std::move(pts));
}

// Random points with no d+1 on a common hyperplane and distinct coordinates.
inline PointSet random_general_points(std::mt19937_64& rng, std::size_t n, int d, long range = 1000) {
    for (;;) {
        PointSet P = random_points(rng, n, d, range, true);
        if (in_general_position(P)) return P;
    }
}

// Solves the (d+1) x k system [p_1 .. p_k; 1 .. 1] lambda = [q; 1] by
// Gaussian elimination. Returns nullopt when inconsistent or underdetermined.
inline std::optional<std::vector<Scalar>> barycentric(const std::vector<Point>& S, const Point& q) {
    const std::size_t k = S.size(), d = q.size(), rows = d + 1;
    std::vector<std::vector<Scalar>> M(rows, std::vector<Scalar>(k + 1));
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < k; ++c) M[r][c] = S[c][r];
        M[r][k] = q[r];
    }
    for (std::size_t c = 0; c < k; ++c) M[d][c] = 1;
    M[d][k] = 1;
    std::size_t row = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t c = 0; c < k && row < rows; ++c) {
        std::size_t p = row;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) return std::nullopt;  // dependent columns
        std::swap(M[p], M[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || M[r][c] == 0) continue;
            Scalar f = M[r][c] / M[row][c];
            for (std::size_t j = c; j <= k; ++j) M[r][j] -= f * M[row][j];
        }
        pivcol.push_back(c);
        ++row;
    }
    if (row < k) return std::nullopt;
    for (std::size_t r = row; r < rows; ++r)
        if (M[r][k] != 0) return std::nullopt;
    std::vector<Scalar> lam(k);
    for (std::size_t r = 0; r < k; ++r) lam[pivcol[r]] = M[r][k] / M[r][pivcol[r]];
    return lam;
}

// Caratheodory: q is in conv(S) iff it is a convex combination of at most d+1
// affinely independent points of S.
inline bool hull_oracle(const Point& q, const std::vector<Point>& S) {
    const std::size_t d = q.size(), n = S.size();
    const std::size_t kmax = std::min(n, d + 1);
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), 0);
        for (;;) {
            std::vector<Point> sub;
            for (auto i : idx) sub.push_back(S[i]);
            if (auto lam = barycentric(sub, q))
                if (std::all_of(lam->begin(), lam->end(), [](const Scalar& x) { return x >= 0; })) return true;
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

inline std::vector<Point> subset_points(const PointSet& P, std::uint64_t mask) {
    std::vector<Point> out;
    for (std::size_t i = 0; i < P.size(); ++i)
        if (mask >> i & 1) out.push_back(P[i]);
    return out;
}

inline std::size_t hull_content(const PointSet& P, const std::vector<Point>& S) {
    std::size_t m = 0;
    for (const auto& p : P.points)
        if (hull_oracle(p, S)) ++m;
    return m;
}

// Largest subset whose hull avoids every point of `avoid`, by trying all 2^n subsets.
inline std::size_t max_avoiding_oracle(const PointSet& P, const std::vector<Point>& avoid) {
    const std::size_t n = P.size();
    std::size_t best = 0;
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        auto c = static_cast<std::size_t>(__builtin_popcountll(m));
        if (c <= best) continue;
        auto S = subset_points(P, m);
        bool ok = true;
        for (const auto& q : avoid)
            if (hull_oracle(q, S)) {
                ok = false;
                break;
            }
        if (ok) best = c;
    }
    return best;
}

inline bool in_box(const Point& p, const Point& lo, const Point& hi) {
    for (std::size_t a = 0; a < p.size(); ++a)
        if (p[a] < lo[a] || p[a] > hi[a]) return false;
    return true;
}

using BoxKey = std::pair<Point, Point>;

// Bounding boxes of all nonempty subsets holding at least min_count points.
inline std::set<BoxKey> subset_box_oracle(const PointSet& P, std::size_t min_count) {
    std::set<BoxKey> out;
    const std::size_t n = P.size();
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        auto S = subset_points(P, m);
        Point lo = S[0], hi = S[0];
        for (const auto& p : S)
            for (std::size_t a = 0; a < p.size(); ++a) {
                if (p[a] < lo[a]) lo[a] = p[a];
                if (p[a] > hi[a]) hi[a] = p[a];
            }
        std::size_t c = 0;
        for (const auto& p : P.points) c += in_box(p, lo, hi);
        if (c >= min_count) out.insert({lo, hi});
    }
    return out;
}

inline long long heavy_threshold(const Scalar& eps, std::size_t n) {
    Scalar v = eps * Scalar(static_cast<long>(n));
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f.get_si() + 1;
}

// Per level: does some range violate it? Ranges are subset bounding boxes.
inline std::vector<bool> box_verdict_oracle(const PointSet& P, const WeightedNet& net) {
    const std::size_t L = net.profile.size();
    std::vector<bool> pass(L, true);
    for (const auto& [lo, hi] : subset_box_oracle(P, 1)) {
        std::size_t c = 0, k = 0;
        for (const auto& p : P.points) c += in_box(p, lo, hi);
        for (const auto& x : net.points) k += in_box(x, lo, hi);
        for (std::size_t i = 0; i < L; ++i)
            if (static_cast<long long>(c) >= heavy_threshold(net.profile[i], P.size()) && k < i + 1) pass[i] = false;
    }
    return pass;
}

// Per level verdict over all subset hulls, with contents counted by the oracle.
inline std::vector<bool> convex_verdict_oracle(const PointSet& P, const WeightedNet& net) {
    const std::size_t L = net.profile.size(), n = P.size();
    std::vector<bool> pass(L, true);
    const long long t1 = heavy_threshold(net.profile[0], n);
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
        if (__builtin_popcountll(m) < t1) continue;
        auto S = subset_points(P, m);
        std::size_t c = hull_content(P, S), k = 0;
        for (const auto& x : net.points) k += hull_oracle(x, S);
        for (std::size_t i = 0; i < L; ++i)
            if (static_cast<long long>(c) >= heavy_threshold(net.profile[i], n) && k < i + 1) pass[i] = false;
    }
    return pass;
}

inline std::vector<bool> level_passes(const VerificationReport& rep) {
    std::vector<bool> out;
    for (const auto& l : rep.levels) out.push_back(l.pass);
    return out;
}

// Candidate points of a planar family: member vertices and crossings of lines
// through pairs of member vertices.
inline std::vector<Point> arrangement_points(const std::vector<std::vector<Point>>& members) {
    std::vector<Point> verts;
    for (const auto& m : members) verts.insert(verts.end(), m.begin(), m.end());
    std::set<Point> out(verts.begin(), verts.end());
    struct Line {
        Scalar a, b, c;
    };
    std::vector<Line> lines;
    for (const auto& m : members)
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                if (m[i] == m[j]) continue;
                Scalar a = m[j][1] - m[i][1], b = m[i][0] - m[j][0];
                lines.push_back({a, b, a * m[i][0] + b * m[i][1]});
            }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Scalar det = lines[i].a * lines[j].b - lines[i].b * lines[j].a;
            if (det == 0) continue;
            out.insert(Point{(lines[i].c * lines[j].b - lines[i].b * lines[j].c) / det,
                             (lines[i].a * lines[j].c - lines[i].c * lines[j].a) / det});
        }
    return {out.begin(), out.end()};
}

inline bool common_point_oracle(const std::vector<std::vector<Point>>& members) {
    for (const auto& c : arrangement_points(members)) {
        bool all = true;
        for (const auto& m : members)
            if (!hull_oracle(c, m)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

inline bool two_pierce_oracle(const std::vector<std::vector<Point>>& members) {
    auto cand = arrangement_points(members);
    std::vector<std::uint64_t> hit(cand.size(), 0);
    for (std::size_t c = 0; c < cand.size(); ++c)
        for (std::size_t m = 0; m < members.size(); ++m)
            if (hull_oracle(cand[c], members[m])) hit[c] |= std::uint64_t(1) << m;
    const std::uint64_t all = (std::uint64_t(1) << members.size()) - 1;
    for (std::size_t a = 0; a < cand.size(); ++a)
        for (std::size_t b = a; b < cand.size(); ++b)
            if ((hit[a] | hit[b]) == all) return true;
    return false;
}

inline std::shared_ptr<const PointSet> share(PointSet P) { return std::make_shared<const PointSet>(std::move(P)); }

}  // namespace testing_support
