#include "epsnet/constructions.hpp"

#include "epsnet/hull2d.hpp"
#include "epsnet/verification.hpp"

#include <algorithm>
#include <bit>

namespace epsnet {

namespace {

void require_dim(const PointSet& P, int d, const char* what) {
    if (P.dim != d)
        throw InvalidInput(std::string(what) + " expects dimension " + std::to_string(d) + ", got " +
                           std::to_string(P.dim));
}

void require_size(const EpsilonProfile& eps, std::size_t k) {
    if (eps.size() != k)
        throw InvalidInput("expected " + std::to_string(k) + " epsilon values, got " + std::to_string(eps.size()));
}

std::vector<Scalar> axis_values(const PointSet& P, int a) {
    std::vector<Scalar> v;
    for (const auto& p : P.points) v.push_back(p[a]);
    std::sort(v.begin(), v.end());
    return v;
}

Hyperplane axis_plane(int d, int a, const Scalar& offset) {
    Hyperplane h;
    h.normal.assign(static_cast<std::size_t>(d), Scalar(0));
    h.normal[static_cast<std::size_t>(a)] = 1;
    h.offset = offset;
    return h;
}

std::string side_name(int axis, int dir) {
    return "x" + std::to_string(axis) + (dir < 0 ? "<" : ">") + "p1";
}

// Given p1, find p2 lying in every box with more than T1 points that misses
// p1 and in every box with more than T2 points. Exact per axis: the tightest
// lower facet over a family of boxes inside a region is the (t)-th largest
// coordinate of the points in that region.
std::optional<Point> second_point(const PointSet& P, long long T1, long long T2, const Point& p1,
                                  ConstructionTrace& trace, std::string& why) {
    const int d = P.dim;
    const auto n = static_cast<long long>(P.size());
    struct Region {
        std::string name;
        std::vector<std::size_t> idx;
        long long need;
    };
    std::vector<Region> regions;
    for (int a = 0; a < d; ++a)
        for (int dir : {-1, 1}) {
            Region r{side_name(a, dir), {}, T1 + 1};
            for (std::size_t i = 0; i < P.size(); ++i) {
                int s = sgn(P[i][a] - p1[static_cast<std::size_t>(a)]);
                if (s == dir) r.idx.push_back(i);
            }
            trace.count("open side " + r.name, static_cast<long long>(r.idx.size()));
            if (static_cast<long long>(r.idx.size()) > T2) {
                why = "open side " + r.name + " holds " + std::to_string(r.idx.size()) +
                      " points, so a level-2 box misses p1";
                return std::nullopt;
            }
            regions.push_back(std::move(r));
        }
    Region all{"all", {}, T2 + 1};
    for (std::size_t i = 0; i < P.size(); ++i) all.idx.push_back(i);
    regions.push_back(std::move(all));

    Point p2(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        std::optional<Scalar> lo, hi;
        std::string lo_src, hi_src;
        for (const auto& r : regions) {
            if (static_cast<long long>(r.idx.size()) < r.need || r.need > n) continue;
            std::vector<Scalar> v;
            for (auto i : r.idx) v.push_back(P[i][j]);
            std::sort(v.begin(), v.end());
            const auto t = static_cast<std::size_t>(r.need);
            const Scalar& l = v[v.size() - t];  // t-th largest
            const Scalar& h = v[t - 1];         // t-th smallest
            if (!lo || l > *lo) {
                lo = l;
                lo_src = r.name;
            }
            if (!hi || h < *hi) {
                hi = h;
                hi_src = r.name;
            }
        }
        if (!lo) {
            p2[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(j)];
            continue;
        }
        if (*lo > *hi) {
            why = "boxes from " + lo_src + " and " + hi_src + " are disjoint along axis " + std::to_string(j);
            return std::nullopt;
        }
        p2[static_cast<std::size_t>(j)] = (*lo + *hi) / 2;
    }
    return p2;
}

Scalar rank_from(const std::vector<Scalar>& sorted, long long r, bool from_high) {
    auto i = static_cast<std::size_t>(r);
    return from_high ? sorted[sorted.size() - 1 - i] : sorted[i];
}

}  // namespace

namespace {

std::string join_failures(const std::vector<std::string>& f) {
    std::string out;
    for (const auto& s : f) out += (out.empty() ? "" : "; ") + s;
    return out;
}

}  // namespace

std::string thm1_condition_failure(int d, const EpsilonProfile& eps) {
    if (eps.size() != 2) return "a profile of two values is required";
    if (d < 2) return "dimension must be at least 2";
    std::vector<std::string> f;
    Scalar lhs = d * eps[0] + eps[1];
    if (lhs < d) f.push_back("(i) d*eps1 + eps2 >= d fails: " + format_scalar(lhs) + " < " + std::to_string(d));
    Scalar bound = frac(2 * d - 1, 2 * d + 1);
    if (eps[0] < bound)
        f.push_back("(ii) eps1 >= (2d-1)/(2d+1) fails: " + format_scalar(eps[0]) + " < " + format_scalar(bound));
    return join_failures(f);
}

bool check_thm1_conditions(int d, const EpsilonProfile& eps) { return thm1_condition_failure(d, eps).empty(); }

std::string box_pair_condition_failure(int d, const EpsilonProfile& eps) {
    if (eps.size() != 2) return "a profile of two values is required";
    mpz_class p3;
    mpz_ui_pow_ui(p3.get_mpz_t(), 3, static_cast<unsigned long>(d - 1));
    Scalar bound(p3, 2 * p3 + 1);
    bound.canonicalize();
    std::vector<std::string> f;
    if (eps[0] < bound)
        f.push_back("(i) eps1 >= 3^(d-1)/(2*3^(d-1)+1) fails: " + format_scalar(eps[0]) + " < " + format_scalar(bound));
    if (eps[0] + eps[1] < 1) f.push_back("(ii) eps1 + eps2 >= 1 fails: " + format_scalar(eps[0] + eps[1]) + " < 1");
    return join_failures(f);
}

std::string box_triple_condition_failure(const EpsilonProfile& eps) {
    if (eps.size() != 3) return "a profile of three values is required";
    std::vector<std::string> f;
    if (eps[0] < Scalar(3, 8)) f.push_back("(i) eps1 >= 3/8 fails: " + format_scalar(eps[0]) + " < 3/8");
    if (eps[1] < Scalar(1, 2)) f.push_back("(ii) eps2 >= 1/2 fails: " + format_scalar(eps[1]) + " < 1/2");
    if (eps[0] + eps[2] < 1) f.push_back("(iii) eps1 + eps3 >= 1 fails: " + format_scalar(eps[0] + eps[2]) + " < 1");
    return join_failures(f);
}

WeightedNet box_median_point(const PointSet& P) {
    validate(P);
    const std::size_t k = (P.size() + 1) / 2 - 1;  // ceil(n/2)-th order statistic
    Point m;
    for (int a = 0; a < P.dim; ++a) m.push_back(axis_values(P, a)[k]);
    return WeightedNet{{m}, EpsilonProfile({Scalar(1, 2)})};
}

Construction construct_box_pair_2d(const PointSet& P, const EpsilonProfile& eps) {
    validate(P);
    require_dim(P, 2, "construct_box_pair_2d");
    require_size(eps, 2);
    if (auto f = box_pair_condition_failure(2, eps); !f.empty()) throw InvalidInput(f);
    const auto n = static_cast<long long>(P.size());
    const long long T1 = floor_times(eps[0], n), T2 = floor_times(eps[1], n);
    ConstructionTrace tr;
    tr.count("n", n);
    tr.count("T1", T1);
    tr.count("T2", T2);

    auto xs = axis_values(P, 0), ys = axis_values(P, 1);
    const Scalar y0 = ys[static_cast<std::size_t>(T1)];
    tr.hyperplanes.emplace_back("l1", axis_plane(2, 1, y0));

    // split the points below l1 into thirds by x
    std::vector<Scalar> below_x;
    long long above_total = 0;
    for (const auto& p : P.points) {
        if (p[1] < y0) below_x.push_back(p[0]);
        if (p[1] > y0) ++above_total;
    }
    std::sort(below_x.begin(), below_x.end());
    const std::size_t third = below_x.size() / 3;
    Scalar l_first = xs.front() - 1, l_second = xs.back() + 1;
    if (third > 0) {
        l_first = (below_x[third - 1] + below_x[third]) / 2;
        const std::size_t k = below_x.size() - third;
        l_second = (below_x[k - 1] + below_x[k]) / 2;
    }
    tr.hyperplanes.emplace_back("l'", axis_plane(2, 0, l_first));
    tr.hyperplanes.emplace_back("l''", axis_plane(2, 0, l_second));
    long long B1 = 0, B2 = 0;
    for (const auto& p : P.points) {
        if (p[1] > y0 && p[0] < l_first) ++B1;
        if (p[1] > y0 && p[0] > l_second) ++B2;
    }
    tr.count("below l1", static_cast<long long>(below_x.size()));
    tr.count("above l1", above_total);
    tr.count("B1", B1);
    tr.count("B2", B2);
    const bool slide_right = B2 < B1;  // ties keep the left side
    tr.notes.push_back(slide_right ? "slide from the right" : "slide from the left");

    // the rule's choice first, then the remaining rank patterns
    std::vector<std::pair<bool, bool>> patterns = {{false, slide_right}, {false, !slide_right}, {true, false},
                                                   {true, true}};
    std::string first_reason;
    for (auto [y_high, x_high] : patterns) {
        Point p1 = {rank_from(xs, T1, x_high), rank_from(ys, T1, y_high)};
        std::string why;
        ConstructionTrace attempt = tr;
        attempt.hyperplanes.emplace_back("l2", axis_plane(2, 0, p1[0]));
        auto p2 = second_point(P, T1, T2, p1, attempt, why);
        if (p2) {
            if (y_high || x_high != slide_right) attempt.notes.push_back("rule choice failed: " + first_reason);
            attempt.witnesses.emplace_back("p1", p1);
            attempt.witnesses.emplace_back("p2", *p2);
            return Construction{WeightedNet{{p1, *p2}, eps}, std::move(attempt)};
        }
        if (first_reason.empty()) first_reason = why;
        tr.notes.push_back("p1 candidate (" + format_scalar(p1[0]) + ", " + format_scalar(p1[1]) + ") failed: " + why);
    }
    throw ConstructionFailure("no second point exists for any candidate p1: " + first_reason, tr);
}

Construction construct_box_pair_highd(const PointSet& P, const EpsilonProfile& eps) {
    validate(P);
    require_size(eps, 2);
    if (P.dim == 2) return construct_box_pair_2d(P, eps);
    if (auto f = box_pair_condition_failure(P.dim, eps); !f.empty()) throw InvalidInput(f);
    const int d = P.dim;
    const auto n = static_cast<long long>(P.size());
    const long long T1 = floor_times(eps[0], n), T2 = floor_times(eps[1], n);
    ConstructionTrace tr;
    tr.count("n", n);
    tr.count("T1", T1);
    tr.count("T2", T2);
    std::vector<std::vector<Scalar>> vals;
    for (int a = 0; a < d; ++a) vals.push_back(axis_values(P, a));
    std::string first_reason;
    for (unsigned pattern = 0; pattern < (1u << d); ++pattern) {
        Point p1;
        for (int a = 0; a < d; ++a) p1.push_back(rank_from(vals[static_cast<std::size_t>(a)], T1, (pattern >> a) & 1));
        ConstructionTrace attempt = tr;
        for (int a = 0; a < d; ++a)
            attempt.hyperplanes.emplace_back("h" + std::to_string(a), axis_plane(d, a, p1[static_cast<std::size_t>(a)]));
        std::string why;
        auto p2 = second_point(P, T1, T2, p1, attempt, why);
        if (p2) {
            attempt.count("pattern", pattern);
            attempt.witnesses.emplace_back("p1", p1);
            attempt.witnesses.emplace_back("p2", *p2);
            return Construction{WeightedNet{{p1, *p2}, eps}, std::move(attempt)};
        }
        if (first_reason.empty()) first_reason = why;
        tr.notes.push_back("pattern " + std::to_string(pattern) + " failed: " + why);
    }
    throw ConstructionFailure("no rank pattern yields a second point: " + first_reason, tr);
}

Construction construct_box_triple_2d(const PointSet& P, const EpsilonProfile& eps) {
    validate(P);
    require_dim(P, 2, "construct_box_triple_2d");
    require_size(eps, 3);
    if (auto f = box_triple_condition_failure(eps); !f.empty()) throw InvalidInput(f);
    const auto n = static_cast<long long>(P.size());
    const long long T1 = floor_times(eps[0], n), T2 = floor_times(eps[1], n), T3 = floor_times(eps[2], n);
    ConstructionTrace tr;
    tr.count("n", n);
    tr.count("T1", T1);
    tr.count("T2", T2);
    tr.count("T3", T3);

    // halving lines: through the median point for odd n, between the middle two otherwise
    Point p1;
    for (int a = 0; a < 2; ++a) {
        auto v = axis_values(P, a);
        const auto h = static_cast<std::size_t>(n / 2);
        p1.push_back(n % 2 ? v[h] : (v[h - 1] + v[h]) / 2);
    }
    tr.hyperplanes.emplace_back("l1", axis_plane(2, 1, p1[1]));
    tr.hyperplanes.emplace_back("l2", axis_plane(2, 0, p1[0]));

    long long LA = 0, RB = 0, LB = 0, RA = 0;
    for (const auto& p : P.points) {
        int sx = sgn(p[0] - p1[0]), sy = sgn(p[1] - p1[1]);
        if (sx < 0 && sy > 0) ++LA;
        if (sx > 0 && sy < 0) ++RB;
        if (sx < 0 && sy < 0) ++LB;
        if (sx > 0 && sy > 0) ++RA;
    }
    tr.count("quadrant L&A", LA);
    tr.count("quadrant R&B", RB);
    tr.count("quadrant L&B", LB);
    tr.count("quadrant R&A", RA);
    // areas: 0 = A (above), 1 = B (below), 2 = L (left), 3 = R (right)
    const bool la_pair = std::min(LA, RB) >= std::min(LB, RA);
    const int group_of[4] = {0, 1, la_pair ? 0 : 1, la_pair ? 1 : 0};
    tr.notes.push_back(la_pair ? "families: {A, L} and {B, R}" : "families: {A, R} and {B, L}");

    // rank space with prefix sums
    std::vector<Scalar> cx = axis_values(P, 0), cy = axis_values(P, 1);
    cx.erase(std::unique(cx.begin(), cx.end()), cx.end());
    cy.erase(std::unique(cy.begin(), cy.end()), cy.end());
    const std::size_t mx = cx.size(), my = cy.size(), W = my + 1;
    std::vector<std::int32_t> S((mx + 1) * W, 0);
    for (const auto& p : P.points) {
        auto rx = static_cast<std::size_t>(std::lower_bound(cx.begin(), cx.end(), p[0]) - cx.begin());
        auto ry = static_cast<std::size_t>(std::lower_bound(cy.begin(), cy.end(), p[1]) - cy.begin());
        S[(rx + 1) * W + ry + 1] += 1;
    }
    for (std::size_t i = 1; i <= mx; ++i)
        for (std::size_t j = 1; j <= my; ++j) S[i * W + j] += S[(i - 1) * W + j] + S[i * W + j - 1] - S[(i - 1) * W + j - 1];
    auto cnt = [&](long l0, long h0, long l1, long h1) -> long long {
        if (l0 > h0 || l1 > h1) return 0;
        auto a = static_cast<std::size_t>(l0), b = static_cast<std::size_t>(h0), c = static_cast<std::size_t>(l1),
             e = static_cast<std::size_t>(h1);
        return S[(b + 1) * W + e + 1] - S[a * W + e + 1] - S[(b + 1) * W + c] + S[a * W + c];
    };
    // index ranges of the open sides
    const long x_lt = static_cast<long>(std::lower_bound(cx.begin(), cx.end(), p1[0]) - cx.begin()) - 1;
    const long x_gt = static_cast<long>(std::upper_bound(cx.begin(), cx.end(), p1[0]) - cx.begin());
    const long y_lt = static_cast<long>(std::lower_bound(cy.begin(), cy.end(), p1[1]) - cy.begin()) - 1;
    const long y_gt = static_cast<long>(std::upper_bound(cy.begin(), cy.end(), p1[1]) - cy.begin());

    struct Bounds {
        long lo[2] = {-1, -1}, hi[2] = {1L << 40, 1L << 40};
        std::array<long, 4> lo_box[2], hi_box[2];
        long long members = 0;
        void add(long l0, long h0, long l1, long h1) {
            ++members;
            std::array<long, 4> b = {l0, h0, l1, h1};
            if (l0 > lo[0]) lo[0] = l0, lo_box[0] = b;
            if (l1 > lo[1]) lo[1] = l1, lo_box[1] = b;
            if (h0 < hi[0]) hi[0] = h0, hi_box[0] = b;
            if (h1 < hi[1]) hi[1] = h1, hi_box[1] = b;
        }
    } fam[2];

    const long M0 = static_cast<long>(mx), M1 = static_cast<long>(my);
    for (long l0 = 0; l0 < M0; ++l0)
        for (long h0 = l0; h0 < M0; ++h0) {
            if (cnt(l0, h0, 0, M1 - 1) <= T1) continue;
            const bool has_x = cx[static_cast<std::size_t>(l0)] <= p1[0] && p1[0] <= cx[static_cast<std::size_t>(h0)];
            for (long l1 = 0; l1 < M1; ++l1) {
                if (cnt(l0, h0, l1, M1 - 1) <= T1) break;
                for (long h1 = l1; h1 < M1; ++h1) {
                    const long long m = cnt(l0, h0, l1, h1);
                    if (m <= T1) continue;
                    const bool has_p1 =
                        has_x && cy[static_cast<std::size_t>(l1)] <= p1[1] && p1[1] <= cy[static_cast<std::size_t>(h1)];
                    if (m > T3 && !has_p1) {
                        tr.notes.push_back("a level-3 box misses p1");
                        throw ConstructionFailure("a box with more than eps3*n points misses p1", tr);
                    }
                    if (m > T3 || (m > T2 && !has_p1)) {
                        fam[0].add(l0, h0, l1, h1);
                        fam[1].add(l0, h0, l1, h1);
                        continue;
                    }
                    if (has_p1 && m <= T2) continue;  // p1 alone is enough
                    const long long area[4] = {cnt(l0, h0, std::max(l1, y_gt), h1), cnt(l0, h0, l1, std::min(h1, y_lt)),
                                               cnt(l0, std::min(h0, x_lt), l1, h1), cnt(std::max(l0, x_gt), h0, l1, h1)};
                    int best = 0;
                    for (int X = 1; X < 4; ++X)
                        if (area[X] > area[best]) best = X;
                    fam[group_of[best]].add(l0, h0, l1, h1);
                }
            }
        }

    WeightedNet net{{p1}, eps};
    const char* names[2] = {"p2", "p3"};
    for (int f = 0; f < 2; ++f) {
        tr.count(std::string("family ") + names[f] + " boxes", fam[f].members);
        Point p(2);
        for (int a = 0; a < 2; ++a) {
            const auto& c = a == 0 ? cx : cy;
            if (fam[f].lo[a] < 0) {
                p[static_cast<std::size_t>(a)] = p1[static_cast<std::size_t>(a)];
                continue;
            }
            if (fam[f].lo[a] > fam[f].hi[a]) {
                auto show = [&](const std::array<long, 4>& b) {
                    return "[" + format_scalar(cx[static_cast<std::size_t>(b[0])]) + "," +
                           format_scalar(cx[static_cast<std::size_t>(b[1])]) + "]x[" +
                           format_scalar(cy[static_cast<std::size_t>(b[2])]) + "," +
                           format_scalar(cy[static_cast<std::size_t>(b[3])]) + "]";
                };
                throw ConstructionFailure(std::string("boxes for ") + names[f] + " do not pairwise intersect: " +
                                              show(fam[f].lo_box[a]) + " and " + show(fam[f].hi_box[a]),
                                          tr);
            }
            p[static_cast<std::size_t>(a)] =
                (c[static_cast<std::size_t>(fam[f].lo[a])] + c[static_cast<std::size_t>(fam[f].hi[a])]) / 2;
        }
        net.points.push_back(p);
    }
    tr.witnesses.emplace_back("p1", net.points[0]);
    tr.witnesses.emplace_back("p2", net.points[1]);
    tr.witnesses.emplace_back("p3", net.points[2]);
    return Construction{std::move(net), std::move(tr)};
}

// ---------- convex sets ----------

namespace {

struct ClassBuilder {
    int d = 2;
    std::vector<Point> region;  // planar running intersection
    bool started = false;
    std::vector<ConvexSet> members;  // used when d != 2
    long long count = 0;

    void add(const std::vector<Point>& pts, const SubsetHull& sh) {
        ++count;
        if (d != 2) {
            members.push_back(sh);
            return;
        }
        auto poly = planar::convex_hull(pts);
        if (!started) {
            region = std::move(poly);
            started = true;
            return;
        }
        if (region.empty()) return;
        bool inside = true;
        for (const auto& v : region)
            if (!planar::in_convex_polygon(v, poly)) {
                inside = false;
                break;
            }
        if (inside) return;
        for (const auto& h : planar::hull_halfplanes(poly)) {
            region = planar::clip(region, h);
            if (region.empty()) return;
        }
    }

    std::optional<Point> point() const {
        if (d == 2) {
            if (!started || region.empty()) return std::nullopt;
            return planar::centroid_of_vertices(region);
        }
        if (members.empty()) return std::nullopt;
        return polytopes_intersect(members);
    }
};

}  // namespace

Construction construct_convex_pair(const PointSet& P, const EpsilonProfile& eps, std::uint64_t budget) {
    validate(P);
    require_size(eps, 2);
    const int d = P.dim;
    if (auto f = thm1_condition_failure(d, eps); !f.empty()) throw InvalidInput(f);
    if (!in_general_position(P)) throw InvalidInput("point set is not in general position (d+1 points on a hyperplane)");
    if (!distinct_coordinates(P, d - 1))
        throw InvalidInput("repeated coordinates along axis " + std::to_string(d - 1) + " (halving axis)");
    const std::size_t n = P.size();
    const long long T1 = floor_times(eps[0], static_cast<long long>(n));
    const long long T2 = floor_times(eps[1], static_cast<long long>(n));
    const auto t1 = static_cast<std::size_t>(T1 + 1), t2 = static_cast<std::size_t>(T2 + 1);

    std::uint64_t cost = convex_verification_cost(n, eps, budget);
    if (cost > budget)
        throw BudgetExceeded("convex construction needs more than " + std::to_string(budget) + " subset hulls");
    if (d != 2 && cost > 2000)
        throw BudgetExceeded("convex construction in dimension " + std::to_string(d) + " is limited to 2000 subset hulls, needs " +
                             std::to_string(cost));

    ConstructionTrace tr;
    tr.count("n", static_cast<long long>(n));
    tr.count("t1", static_cast<long long>(t1));
    tr.count("t2", static_cast<long long>(t2));
    Hyperplane H = halving_hyperplane(P, d - 1);
    tr.hyperplanes.emplace_back("H", H);

    auto base = std::make_shared<const PointSet>(P);
    const bool masks = d == 2 && n <= 64;
    std::vector<planar::AvoidMasks> pm;
    std::uint64_t below_mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (masks) pm.emplace_back(P.points, P[i]);
        if (H.side(P[i]) < 0) below_mask |= std::uint64_t(1) << i;
    }

    ClassBuilder A, B;
    A.d = B.d = d;
    long long small_a = 0, small_b = 0, big = 0;
    auto classify = [&](const SubsetHull& sh) {
        auto pts = sh.points();
        std::size_t m = 0, below = 0;
        if (masks) {
            std::uint64_t S = 0;
            for (auto i : sh.indices) S |= std::uint64_t(1) << i;
            std::uint64_t content = S;
            for (std::size_t p = 0; p < n; ++p)
                if (!((S >> p) & 1) && !pm[p].avoided_by(S)) content |= std::uint64_t(1) << p;
            m = static_cast<std::size_t>(std::popcount(content));
            below = static_cast<std::size_t>(std::popcount(content & below_mask));
        } else {
            for (std::size_t p = 0; p < n; ++p)
                if (point_in_hull(P[p], pts)) {
                    ++m;
                    if (H.side(P[p]) < 0) ++below;
                }
        }
        if (m >= t2) {
            ++big;
            A.add(pts, sh);
            B.add(pts, sh);
        } else if (below > m - below) {
            ++small_b;
            B.add(pts, sh);
        } else {
            ++small_a;
            A.add(pts, sh);
        }
    };
    for (std::size_t t : {t1, t2}) {
        if (t > n) continue;
        auto stream = minimal_convex_ranges(base, t);
        while (auto sh = stream.next()) classify(*sh);
    }
    tr.count("big hulls", big);
    tr.count("small hulls in A", small_a);
    tr.count("small hulls in B", small_b);

    auto p1 = A.count ? A.point() : std::optional<Point>(P[0]);
    auto p2 = B.count ? B.point() : std::optional<Point>(P[0]);
    if (!p1) throw ConstructionFailure("the hulls of class A have no common point", tr);
    if (!p2) throw ConstructionFailure("the hulls of class B have no common point", tr);
    tr.witnesses.emplace_back("p1", *p1);
    tr.witnesses.emplace_back("p2", *p2);
    return Construction{WeightedNet{{*p1, *p2}, eps}, std::move(tr)};
}

}  // namespace epsnet
