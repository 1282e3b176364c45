#include "epsnet/gadgets.hpp"

#include "epsnet/hull2d.hpp"
#include "epsnet/parallel.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace epsnet {

std::string to_string(ClaimKind k) {
    switch (k) {
        case ClaimKind::EmptyIntersection: return "EmptyIntersection";
        case ClaimKind::PairwiseDisjoint: return "PairwiseDisjoint";
        case ClaimKind::StrictSide: return "StrictSide";
        case ClaimKind::Membership: return "Membership";
        case ClaimKind::Count: return "Count";
        case ClaimKind::NotTwoPierceable: return "NotTwoPierceable";
        case ClaimKind::OracleThreshold: return "OracleThreshold";
    }
    return "?";
}

const ConvexSet& GadgetInstance::witness(const std::string& n) const {
    for (const auto& [name, set] : witnesses)
        if (name == n) return set;
    throw InvalidInput("gadget " + name + " has no witness named " + n);
}

namespace {

std::string show_point(const Point& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + format_scalar(p[i]);
    return s + ")";
}

SubsetHull hull_of(const std::shared_ptr<const PointSet>& P, std::vector<std::size_t> idx) {
    std::sort(idx.begin(), idx.end());
    return SubsetHull{P, std::move(idx)};
}

Halfspace axis_halfspace(int d, int axis, int sign, const Scalar& offset, bool closed) {
    // sign * x_axis <= offset (or <)
    Halfspace h;
    h.normal.assign(static_cast<std::size_t>(d), Scalar(0));
    h.normal[static_cast<std::size_t>(axis)] = sign;
    h.offset = offset;
    h.closed = closed;
    return h;
}

HPolytope single(int d, Halfspace h) { return halfspace_polytope(d, {std::move(h)}); }

Point lerp(const Point& a, const Point& b, const Scalar& t) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * (b[i] - a[i]);
    return r;
}

CertifiedClaim claim(std::string name, ClaimKind kind, std::string statement, std::vector<std::string> ops) {
    CertifiedClaim c;
    c.name = std::move(name);
    c.kind = kind;
    c.statement = std::move(statement);
    c.operands = std::move(ops);
    return c;
}

CertifiedClaim membership(std::string name, std::string statement, const std::string& op, Point q, bool inside) {
    auto c = claim(std::move(name), ClaimKind::Membership, std::move(statement), {op});
    c.point = std::move(q);
    c.expect_inside = inside;
    return c;
}

std::vector<ConvexSet> operands_of(const GadgetInstance& g, const CertifiedClaim& c) {
    std::vector<ConvexSet> fam;
    for (const auto& o : c.operands) fam.push_back(g.witness(o));
    return fam;
}

bool inside(const ConvexSet& s, const Point& q) {
    if (auto* h = std::get_if<HPolytope>(&s)) return h->contains(q);
    return point_in_hull(q, std::get<SubsetHull>(s));
}

Scalar random_rational(std::mt19937_64& rng, long lo, long hi, long den) {
    std::uniform_int_distribution<long> d(lo * den, hi * den);
    return frac(d(rng), den);
}

}  // namespace

ClaimResult check_claim(const GadgetInstance& g, const CertifiedClaim& c) {
    ClaimResult r{c.name, to_string(c.kind), c.statement, false, ""};
    switch (c.kind) {
        case ClaimKind::EmptyIntersection: {
            auto x = polytopes_intersect(operands_of(g, c));
            r.pass = !x;
            if (x) r.detail = "common point " + show_point(*x);
            break;
        }
        case ClaimKind::PairwiseDisjoint: {
            auto fam = operands_of(g, c);
            r.pass = true;
            for (std::size_t i = 0; i < fam.size() && r.pass; ++i)
                for (std::size_t j = i + 1; j < fam.size(); ++j)
                    if (auto x = polytopes_intersect({fam[i], fam[j]})) {
                        r.pass = false;
                        r.detail = c.operands[i] + " and " + c.operands[j] + " share " + show_point(*x);
                        break;
                    }
            break;
        }
        case ClaimKind::StrictSide: {
            auto fam = operands_of(g, c);
            Halfspace comp;  // closed complement of the open halfspace
            for (const auto& v : c.halfspace->normal) comp.normal.push_back(-v);
            comp.offset = -c.halfspace->offset;
            fam.push_back(single(static_cast<int>(comp.normal.size()), comp));
            auto x = polytopes_intersect(fam);
            r.pass = !x;
            if (x) r.detail = "point on the wrong side " + show_point(*x);
            break;
        }
        case ClaimKind::Membership: {
            bool in = inside(g.witness(c.operands.at(0)), *c.point);
            r.pass = in == c.expect_inside;
            r.detail = show_point(*c.point) + (in ? " is inside " : " is outside ") + c.operands[0];
            break;
        }
        case ClaimKind::Count: {
            const auto& w = g.witness(c.operands.at(0));
            std::size_t m = 0;
            for (const auto& p : g.points->points)
                if (inside(w, p)) ++m;
            r.pass = m == c.expected_count;
            r.detail = std::to_string(m) + " points, expected " + std::to_string(c.expected_count);
            break;
        }
        case ClaimKind::NotTwoPierceable: {
            auto pair = pierceable_by_two(operands_of(g, c));
            r.pass = !pair;
            if (pair) r.detail = "pierced by " + show_point(pair->first) + " and " + show_point(pair->second);
            break;
        }
        case ClaimKind::OracleThreshold: {
            std::size_t worst = g.points->size();
            std::size_t failures = 0;
            std::string first_bad;
            for (const auto& avoid : c.samples) {
                std::size_t v = max_subset_avoiding(*g.points, avoid);
                worst = std::min(worst, v);
                if (v < c.threshold) {
                    if (!failures) {
                        first_bad = "";
                        for (const auto& q : avoid) first_bad += show_point(q) + " ";
                    }
                    ++failures;
                }
            }
            r.pass = failures == 0;
            r.detail = std::to_string(c.samples.size()) + " samples, minimum " + std::to_string(worst) +
                       ", threshold " + std::to_string(c.threshold);
            if (failures) r.detail += ", " + std::to_string(failures) + " below threshold, first at " + first_bad;
            break;
        }
    }
    return r;
}

VerificationReport certify(const GadgetInstance& g) {
    VerificationReport rep;
    rep.engine = "gadget-claims";
    std::vector<ClaimResult> out(g.claims.size());
    parallel_for(g.claims.size(), [&](std::size_t i) { out[i] = check_claim(g, g.claims[i]); });
    rep.claims = std::move(out);
    rep.ranges_examined = g.claims.size();
    return rep;
}

GadgetInstance rebase(const GadgetInstance& g, PointSet moved) {
    if (moved.size() != g.points->size() || moved.dim != g.points->dim)
        throw InvalidInput("rebase: point set shape differs");
    GadgetInstance out = g;
    out.points = std::make_shared<const PointSet>(std::move(moved));
    for (auto& [name, w] : out.witnesses)
        if (auto* sh = std::get_if<SubsetHull>(&w)) sh->base = out.points;
    return out;
}

// ---------- five clusters ----------

std::vector<ConvexSet> five_cluster_regions(const GadgetInstance& g) {
    std::vector<ConvexSet> out;
    for (int i = 0; i < 5; ++i) out.push_back(g.witness("I" + std::to_string(i)));
    return out;
}

GadgetInstance gadget_five_clusters(std::size_t k, const Scalar& delta) {
    if (k < 1) throw InvalidInput("five-clusters needs k >= 1");
    if (sgn(delta) <= 0) throw InvalidInput("five-clusters needs delta > 0");
    // pentagon corners on the unit circle, rounded to three decimals
    const long corner[5][2] = {{0, 1000}, {-951, 309}, {-588, -809}, {588, -809}, {951, 309}};
    std::vector<Point> pts;
    for (int c = 0; c < 5; ++c)
        for (std::size_t j = 0; j < k; ++j) {
            Scalar t = frac(static_cast<long>(2 * j + 1), static_cast<long>(k + 1)) - 1;
            Scalar den = 1 + t * t;
            Scalar r = delta / 2;
            pts.push_back({frac(corner[c][0], 1000) + r * (1 - t * t) / den,
                           frac(corner[c][1], 1000) + r * 2 * t / den});
        }
    GadgetInstance g;
    g.name = "five-clusters";
    g.points = std::make_shared<const PointSet>(2, std::move(pts));
    g.parameters = {{"k", std::to_string(k)}, {"delta", format_scalar(delta)}};

    auto cluster = [&](int c) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < k; ++j) idx.push_back(static_cast<std::size_t>((c % 5 + 5) % 5) * k + j);
        return idx;
    };
    auto clusters = [&](std::initializer_list<int> cs) {
        std::vector<std::size_t> idx;
        for (int c : cs)
            for (auto i : cluster(c)) idx.push_back(i);
        return hull_of(g.points, idx);
    };
    std::vector<std::string> cnames;
    for (int c = 0; c < 5; ++c) {
        cnames.push_back("C" + std::to_string(c));
        g.witnesses.emplace_back(cnames.back(), clusters({c}));
    }
    g.claims.push_back(claim("clusters-disjoint", ClaimKind::PairwiseDisjoint, "the five cluster hulls are pairwise disjoint",
                             cnames));
    std::vector<std::string> regions;
    for (int i = 0; i < 5; ++i) {
        // diagonal from cluster i to cluster i+2; l+ drops cluster i+1, l- keeps only i, i+1, i+2
        auto plus = clusters({i, i + 2, i + 3, i + 4});
        auto minus = clusters({i, i + 1, i + 2});
        std::string s = std::to_string(i);
        g.witnesses.emplace_back("L+" + s, plus);
        g.witnesses.emplace_back("L-" + s, minus);
        auto polyA = planar::convex_hull(plus.points());
        auto polyB = planar::convex_hull(minus.points());
        auto hs = planar::hull_halfplanes(polyA);
        auto hb = planar::hull_halfplanes(polyB);
        hs.insert(hs.end(), hb.begin(), hb.end());
        HPolytope region = halfspace_polytope(2, hs);
        std::vector<Point> outline = polyA;
        for (const auto& h : hb) outline = planar::clip(outline, h);
        if (outline.empty()) throw InvalidInput("delta too large: region " + s + " is empty");
        region.witness = planar::centroid_of_vertices(outline);
        g.witnesses.emplace_back("I" + s, region);
        g.outlines.emplace_back("I" + s, outline);
        regions.push_back("I" + s);

        auto cp = claim("count-L+" + s, ClaimKind::Count, "L+" + s + " holds exactly the four clusters other than " +
                                                               std::to_string((i + 1) % 5), {"L+" + s});
        cp.expected_count = 4 * k;
        g.claims.push_back(cp);
        auto cm = claim("count-L-" + s, ClaimKind::Count, "L-" + s + " holds exactly three consecutive clusters",
                        {"L-" + s});
        cm.expected_count = 3 * k;
        g.claims.push_back(cm);
    }
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c)
                g.claims.push_back(claim("triple-" + std::to_string(a) + std::to_string(b) + std::to_string(c),
                                         ClaimKind::EmptyIntersection, "no point lies in three of the regions",
                                         {regions[static_cast<std::size_t>(a)], regions[static_cast<std::size_t>(b)],
                                          regions[static_cast<std::size_t>(c)]}));
    g.claims.push_back(claim("not-two-pierceable", ClaimKind::NotTwoPierceable,
                             "no two points meet all five regions", regions));

    // generation-time checks: cluster separation and exact counts depend on delta
    for (const auto& c : g.claims)
        if (c.kind == ClaimKind::PairwiseDisjoint || c.kind == ClaimKind::Count)
            if (auto r = check_claim(g, c); !r.pass)
                throw InvalidInput("delta too large: " + c.name + " fails (" + r.detail + ")");
    return g;
}

// ---------- hexagon with two poles ----------

GadgetInstance gadget_hexagon_3d(std::size_t oracle_samples, std::uint64_t seed) {
    // 3-fold symmetric under (x, y) -> (-y, x - y)
    const long V[6][2] = {{6, 0}, {4, 3}, {0, 6}, {-3, 1}, {-6, -6}, {-1, -4}};
    const char* vname[6] = {"a1", "b1", "c1", "a2", "b2", "c2"};
    std::vector<Point> pts;
    for (auto& v : V) pts.push_back({Scalar(v[0]), Scalar(v[1]), Scalar(0)});
    pts.push_back({Scalar(0), Scalar(0), Scalar(1)});
    pts.push_back({Scalar(0), Scalar(0), Scalar(-1)});
    const std::size_t U1 = 6, U2 = 7;

    GadgetInstance g;
    g.name = "hexagon3d";
    g.points = std::make_shared<const PointSet>(3, pts);
    g.parameters = {{"pole_height", "1"}};
    auto v = [](int i) { return static_cast<std::size_t>(((i % 6) + 6) % 6); };

    g.witnesses.emplace_back("u1", hull_of(g.points, {U1}));
    g.witnesses.emplace_back("u2", hull_of(g.points, {U2}));
    g.witnesses.emplace_back("plane", halfspace_polytope(3, {axis_halfspace(3, 2, 1, 0, true), axis_halfspace(3, 2, -1, 0, true)}));
    for (int s : {0, 2, 4}) {
        std::string q = "Q" + std::to_string(s);
        g.witnesses.emplace_back(q, hull_of(g.points, {v(s), v(s + 1), v(s + 2), v(s + 3)}));
        std::vector<Point> outline;
        for (int j = 0; j < 4; ++j) outline.push_back({pts[v(s + j)][0], pts[v(s + j)][1]});
        g.outlines.emplace_back(q, planar::convex_hull(outline));
    }

    auto side = [&](std::string name, std::size_t u, int sign) {
        auto c = claim(std::move(name), ClaimKind::StrictSide,
                       std::string(sign > 0 ? "u1 lies strictly above" : "u2 lies strictly below") + " the hexagon plane",
                       {u == U1 ? "u1" : "u2"});
        c.halfspace = axis_halfspace(3, 2, -sign, 0, false);
        return c;
    };
    g.claims.push_back(side("u1-above", U1, 1));
    g.claims.push_back(side("u2-below", U2, -1));
    g.claims.push_back(claim("colored-areas", ClaimKind::EmptyIntersection,
                             "the three colored quadrilaterals have no common point", {"Q0", "Q2", "Q4"}));

    // p1 at a hexagon vertex
    for (int j = 0; j < 6; ++j) {
        int base = j - j % 2, other = base + (1 - j % 2);
        std::string s = vname[j];
        g.witnesses.emplace_back("A@" + s, hull_of(g.points, {v(base + 2), v(base + 3), v(base + 4), v(base + 5), U1}));
        g.witnesses.emplace_back("B@" + s, hull_of(g.points, {v(other), v(base + 2), v(base + 3), U1, U2}));
        g.witnesses.emplace_back("C@" + s, hull_of(g.points, {v(other), v(base + 4), v(base + 5), U1, U2}));
        for (const char* w : {"A@", "B@", "C@"})
            g.claims.push_back(membership(std::string("vertex-") + s + "-" + w[0], std::string(w, 1) + "@" + s + " avoids " + s,
                                          w + s, pts[v(j)], false));
        g.claims.push_back(claim("vertex-" + s + "-triple", ClaimKind::EmptyIntersection,
                                 "A@" + s + ", B@" + s + " and C@" + s + " share no point of the plane",
                                 {"A@" + s, "B@" + s, "C@" + s, "plane"}));
    }

    // p1 inside two colored areas but not at a vertex
    for (int s : {0, 2, 4}) {
        std::string red = "Q" + std::to_string(s), blue = "Q" + std::to_string((s + 2) % 6);
        std::string tag = red + blue;
        std::string An = "A'@" + tag, Bn = "B'@" + tag, Cn = "C'@" + tag;
        g.witnesses.emplace_back(An, hull_of(g.points, {v(s + 4), v(s + 5), v(s), v(s + 1), U1}));
        g.witnesses.emplace_back(Bn, hull_of(g.points, {v(s + 3), v(s + 4), v(s + 5), U1, U2}));
        g.witnesses.emplace_back(Cn, hull_of(g.points, {v(s + 2), v(s), v(s + 1), U1, U2}));
        g.claims.push_back(claim("two-areas-" + tag + "-A'", ClaimKind::EmptyIntersection,
                                 An + " misses " + red + " ∩ " + blue, {An, red, blue}));
        // B' and C' meet red ∩ blue at most in one hexagon vertex
        for (auto [name, w] : {std::pair<std::string, std::size_t>{Bn, v(s + 3)}, {Cn, v(s + 2)}}) {
            const char* dir[4] = {"x<", "x>", "y<", "y>"};
            for (int h = 0; h < 4; ++h) {
                int axis = h / 2, sign = h % 2 ? -1 : 1;
                std::string hn = std::string("open ") + dir[h] + vname[w];
                if (std::none_of(g.witnesses.begin(), g.witnesses.end(), [&](const auto& p) { return p.first == hn; }))
                    g.witnesses.emplace_back(hn, single(3, axis_halfspace(3, axis, sign, sign * pts[w][static_cast<std::size_t>(axis)], false)));
                g.claims.push_back(claim("two-areas-" + tag + "-" + name.substr(0, 2) + "-" + dir[h], ClaimKind::EmptyIntersection,
                                         name + " meets " + red + " ∩ " + blue + " at most in " + vname[w],
                                         {name, red, blue, hn}));
            }
        }
        g.claims.push_back(claim("two-areas-" + tag + "-triple", ClaimKind::EmptyIntersection,
                                 An + ", " + Bn + " and " + Cn + " share no point of the plane", {An, Bn, Cn, "plane"}));
    }

    // sampled corroboration
    std::vector<Point> structured = pts;
    structured.push_back({Scalar(0), Scalar(0), Scalar(0)});
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) structured.push_back(lerp(pts[i], pts[j], Scalar(1, 2)));
    for (int s : {0, 2, 4}) {
        Point c(3, Scalar(0));
        for (int j = 0; j < 4; ++j)
            for (int a = 0; a < 3; ++a) c[static_cast<std::size_t>(a)] += pts[v(s + j)][static_cast<std::size_t>(a)] / 4;
        structured.push_back(c);
    }
    auto oracle = claim("oracle-5-of-8", ClaimKind::OracleThreshold,
                        "for sampled pairs (p1, p2) some 5 points have a hull avoiding both", {});
    oracle.threshold = 5;
    for (std::size_t i = 0; i < structured.size(); ++i)
        for (std::size_t j = i; j < structured.size(); ++j) oracle.samples.push_back({structured[i], structured[j]});
    std::mt19937_64 rng(seed);
    auto random_point = [&]() -> Point {
        std::uniform_int_distribution<int> mode(0, 3);
        switch (mode(rng)) {
            case 0:
                return {random_rational(rng, -7, 7, 8), random_rational(rng, -7, 7, 8), Scalar(0)};
            case 1: {
                std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
                return lerp(pts[pick(rng)], pts[pick(rng)], random_rational(rng, 0, 1, 16));
            }
            case 2:
                return {random_rational(rng, -2, 2, 8), random_rational(rng, -2, 2, 8), random_rational(rng, -1, 1, 8)};
            default:
                return {random_rational(rng, -7, 7, 8), random_rational(rng, -7, 7, 8), random_rational(rng, -2, 2, 8)};
        }
    };
    while (oracle.samples.size() < oracle_samples) oracle.samples.push_back({random_point(), random_point()});
    g.claims.push_back(std::move(oracle));
    return g;
}

// ---------- simplex with two poles ----------

GadgetInstance gadget_simplex(int d, std::size_t samples, std::uint64_t seed) {
    if (d < 3) throw InvalidInput("simplex gadget needs d >= 3");
    // v_i = e_i for i < d and v_d = 0 in the first d-1 coordinates, shifted to centroid 0
    std::vector<Point> pts;
    const std::size_t D = static_cast<std::size_t>(d);
    for (int i = 0; i < d; ++i) {
        Point p(D, Scalar(0));
        for (std::size_t a = 0; a + 1 < D; ++a) p[a] = (static_cast<int>(a) == i ? Scalar(1) : Scalar(0)) - frac(1, d);
        pts.push_back(p);
    }
    Point u1(D, Scalar(0)), u2(D, Scalar(0));
    u1[D - 1] = 1;
    u2[D - 1] = -1;
    pts.push_back(u1);
    pts.push_back(u2);
    const std::size_t U1 = D, U2 = D + 1;

    GadgetInstance g;
    g.name = "simplex";
    g.points = std::make_shared<const PointSet>(d, pts);
    g.parameters = {{"d", std::to_string(d)}, {"pole_height", "1"}};
    auto vi = [](int i) { return static_cast<std::size_t>(i - 1); };  // 1-based names
    auto vname = [](int i) { return "v" + std::to_string(i); };

    std::vector<std::size_t> all_v;
    for (int i = 1; i <= d; ++i) all_v.push_back(vi(i));
    g.witnesses.emplace_back("S", hull_of(g.points, all_v));
    std::vector<std::size_t> rest(all_v.begin() + 1, all_v.end());
    g.witnesses.emplace_back("S'", hull_of(g.points, rest));
    g.witnesses.emplace_back("above", single(d, axis_halfspace(d, d - 1, -1, 0, false)));
    g.witnesses.emplace_back("below", single(d, axis_halfspace(d, d - 1, 1, 0, false)));

    std::vector<std::string> cs;
    for (int i = 1; i <= d; ++i) {
        std::vector<std::size_t> idx;
        for (int j = 1; j <= d; ++j)
            if (j != i) idx.push_back(vi(j));
        idx.push_back(U1);
        cs.push_back("C" + std::to_string(i));
        g.witnesses.emplace_back(cs.back(), hull_of(g.points, idx));
    }
    auto strict = claim("C-above", ClaimKind::StrictSide, "the common part of all C_i lies strictly above conv(S)", cs);
    strict.halfspace = axis_halfspace(d, d - 1, -1, 0, false);
    g.claims.push_back(strict);

    auto with = [&](std::vector<std::size_t> idx, std::size_t extra) {
        idx.push_back(extra);
        return hull_of(g.points, idx);
    };
    g.witnesses.emplace_back("D1", with(rest, U1));
    g.witnesses.emplace_back("D2", with(rest, U2));
    g.claims.push_back(claim("D-above", ClaimKind::EmptyIntersection, "D1 ∩ D2 has no point above the simplex plane",
                             {"D1", "D2", "above"}));
    g.claims.push_back(claim("D-below", ClaimKind::EmptyIntersection, "D1 ∩ D2 has no point below the simplex plane",
                             {"D1", "D2", "below"}));
    for (int j = 2; j <= d; ++j)
        for (const char* D12 : {"D1", "D2"})
            g.claims.push_back(membership("S'-in-" + std::string(D12) + "-" + vname(j), vname(j) + " lies in " + D12, D12,
                                          pts[vi(j)], true));

    std::vector<std::string> es;
    for (int i = 2; i <= d; ++i) {
        std::vector<std::size_t> idx;
        for (int j = 2; j <= d; ++j)
            if (j != i) idx.push_back(vi(j));
        idx.push_back(U1);
        idx.push_back(U2);
        es.push_back("E" + std::to_string(i));
        g.witnesses.emplace_back(es.back(), hull_of(g.points, idx));
        g.claims.push_back(membership("E" + std::to_string(i) + "-avoids-v1", "E" + std::to_string(i) + " avoids v1",
                                      es.back(), pts[vi(1)], false));
    }
    auto eops = es;
    eops.push_back("S'");
    g.claims.push_back(claim("E-facet", ClaimKind::EmptyIntersection, "the E_i have no common point on the facet opposite v1",
                             eops));

    // sampled convex combinations with disjoint supports
    std::mt19937_64 rng(seed);
    const std::size_t mix_samples = std::min<std::size_t>(samples, 24);
    for (std::size_t s = 0; s < mix_samples; ++s) {
        std::vector<int> perm(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::uniform_int_distribution<int> kd(2, d - 1);
        int k = kd(rng);
        std::uniform_int_distribution<int> kd2(1, d - k);
        int k2 = kd2(rng);
        auto mix = [&](int from, int count) {
            Point p(D, Scalar(0));
            std::vector<Scalar> w;
            Scalar total = 0;
            std::uniform_int_distribution<int> wd(1, 9);
            for (int i = 0; i < count; ++i) {
                w.emplace_back(wd(rng));
                total += w.back();
            }
            for (int i = 0; i < count; ++i)
                for (std::size_t a = 0; a < D; ++a)
                    p[a] += w[static_cast<std::size_t>(i)] / total * pts[vi(perm[static_cast<std::size_t>(from + i)])][a];
            return p;
        };
        Point p1 = mix(0, k), p2 = mix(k, k2);
        std::vector<std::size_t> idx;
        for (int i = 1; i < k; ++i) idx.push_back(vi(perm[static_cast<std::size_t>(i)]));
        for (int i = k + 1; i < k + k2; ++i) idx.push_back(vi(perm[static_cast<std::size_t>(i)]));
        for (int i = k + k2; i < d; ++i) idx.push_back(vi(perm[static_cast<std::size_t>(i)]));
        idx.push_back(U1);
        idx.push_back(U2);
        std::string an = "A#" + std::to_string(s);
        g.witnesses.emplace_back(an, hull_of(g.points, idx));
        auto cnt = claim(an + "-count", ClaimKind::Count, an + " holds d points", {an});
        cnt.expected_count = D;
        g.claims.push_back(cnt);
        g.claims.push_back(membership(an + "-avoids-p1", an + " avoids the first sampled point", an, p1, false));
        g.claims.push_back(membership(an + "-avoids-p2", an + " avoids the second sampled point", an, p2, false));
    }

    if (d == 3) {
        std::vector<Point> structured = pts;
        structured.push_back(Point(D, Scalar(0)));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) structured.push_back(lerp(pts[i], pts[j], Scalar(1, 2)));
        auto oracle = claim("oracle-d-of-d+2", ClaimKind::OracleThreshold,
                            "for sampled pairs (p1, p2) some d points have a hull avoiding both", {});
        oracle.threshold = D;
        for (std::size_t i = 0; i < structured.size(); ++i)
            for (std::size_t j = i; j < structured.size(); ++j) oracle.samples.push_back({structured[i], structured[j]});
        auto rnd = [&]() -> Point {
            std::uniform_int_distribution<int> mode(0, 2);
            int m = mode(rng);
            if (m == 0) {
                std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
                return lerp(pts[pick(rng)], pts[pick(rng)], random_rational(rng, 0, 1, 16));
            }
            Point p(D);
            for (std::size_t a = 0; a + 1 < D; ++a) p[a] = random_rational(rng, -1, 1, 12);
            p[D - 1] = m == 1 ? Scalar(0) : random_rational(rng, -1, 1, 12);
            return p;
        };
        while (oracle.samples.size() < samples) oracle.samples.push_back({rnd(), rnd()});
        g.claims.push_back(std::move(oracle));
    }
    return g;
}

}  // namespace epsnet
