#include "epsnet/verification.hpp"

#include "epsnet/hull2d.hpp"
#include "epsnet/parallel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <unordered_map>

namespace epsnet {

bool VerificationReport::passed() const {
    for (const auto& l : levels)
        if (!l.pass) return false;
    for (const auto& c : claims)
        if (!c.pass) return false;
    return true;
}

Scalar counting_bound(long long n, long long k, long long l, const EpsilonProfile& eps) {
    if (k < 0 || l < 0) throw InvalidInput("counting_bound: k and l must be nonnegative");
    if (eps.size() != 2) throw InvalidInput("counting_bound: expects a profile of length 2");
    Scalar N(static_cast<long>(n)), K(static_cast<long>(k)), L(static_cast<long>(l));
    return N - K * (1 - eps[0]) * N - L * (1 - eps[1]) * N;
}

namespace {

std::vector<long long> thresholds(const EpsilonProfile& eps, long long n) {
    std::vector<long long> t;
    for (std::size_t i = 0; i < eps.size(); ++i) t.push_back(eps.threshold(i, n));
    return t;
}

std::vector<std::size_t> violated_levels(std::size_t m, std::size_t c, const std::vector<long long>& T) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < T.size(); ++i)
        if (static_cast<long long>(m) >= T[i] && c < i + 1) out.push_back(i + 1);
    return out;
}

void check_net(const PointSet& P, const WeightedNet& net) {
    validate(P);
    if (net.points.size() != net.profile.size())
        throw InvalidInput("net has " + std::to_string(net.points.size()) + " points but the profile has " +
                           std::to_string(net.profile.size()) + " values");
    for (const auto& p : net.points)
        if (static_cast<int>(p.size()) != P.dim) throw InvalidInput("net point dimension does not match point set");
}

struct Collector {
    std::size_t K;
    std::vector<std::uint64_t> per_level;
    std::vector<Violation> first;
    std::uint64_t total = 0;
    std::uint64_t examined = 0;

    Collector(std::size_t k_max, std::size_t levels) : K(k_max), per_level(levels, 0) {}

    template <class MakeRange>
    void offer(std::size_t m, std::size_t c, const std::vector<long long>& T, MakeRange&& make) {
        auto lv = violated_levels(m, c, T);
        if (lv.empty()) return;
        for (auto i : lv) ++per_level[i - 1];
        ++total;
        if (first.size() < K) first.push_back(Violation{lv.front(), lv, make(), c, m});
    }

    void merge(Collector&& o) {
        for (std::size_t i = 0; i < per_level.size(); ++i) per_level[i] += o.per_level[i];
        total += o.total;
        examined += o.examined;
        for (auto& v : o.first)
            if (first.size() < K) first.push_back(std::move(v));
    }
};

VerificationReport finish(Collector&& col, const EpsilonProfile& eps, const std::vector<long long>& T,
                          std::string engine) {
    VerificationReport r;
    for (std::size_t i = 0; i < T.size(); ++i)
        r.levels.push_back(LevelVerdict{i + 1, eps[i], T[i], col.per_level[i] == 0, col.per_level[i]});
    r.total_violations = col.total;
    r.truncated = col.total > col.first.size();
    r.violations = std::move(col.first);
    r.ranges_examined = col.examined;
    r.engine = std::move(engine);
    return r;
}

// ---------- boxes: canonical enumeration ----------

struct RankSpace {
    int d;
    std::vector<std::vector<Scalar>> coords;        // distinct sorted coordinates per axis
    std::vector<std::vector<std::uint32_t>> rank;   // rank[p][a]
    std::vector<std::vector<std::uint32_t>> netL;   // #coords <= q_a
    std::vector<std::vector<std::uint32_t>> netU;   // #coords <  q_a

    RankSpace(const PointSet& P, const std::vector<Point>& net) : d(P.dim), coords(static_cast<std::size_t>(P.dim)) {
        for (int a = 0; a < d; ++a) {
            auto& c = coords[static_cast<std::size_t>(a)];
            for (const auto& p : P.points) c.push_back(p[a]);
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
        }
        for (const auto& p : P.points) {
            std::vector<std::uint32_t> r;
            for (int a = 0; a < d; ++a) {
                const auto& c = coords[static_cast<std::size_t>(a)];
                r.push_back(static_cast<std::uint32_t>(std::lower_bound(c.begin(), c.end(), p[a]) - c.begin()));
            }
            rank.push_back(std::move(r));
        }
        for (const auto& q : net) {
            std::vector<std::uint32_t> L, U;
            for (int a = 0; a < d; ++a) {
                const auto& c = coords[static_cast<std::size_t>(a)];
                L.push_back(static_cast<std::uint32_t>(std::upper_bound(c.begin(), c.end(), q[a]) - c.begin()));
                U.push_back(static_cast<std::uint32_t>(std::lower_bound(c.begin(), c.end(), q[a]) - c.begin()));
            }
            netL.push_back(std::move(L));
            netU.push_back(std::move(U));
        }
    }

    std::uint64_t box_count() const {
        unsigned __int128 total = 1;
        for (const auto& c : coords) {
            total *= static_cast<unsigned __int128>(c.size()) * (c.size() + 1) / 2;
            if (total > (static_cast<unsigned __int128>(1) << 62)) return std::uint64_t(1) << 62;
        }
        return static_cast<std::uint64_t>(total);
    }

    bool net_in(std::size_t q, std::size_t a, std::uint32_t lo, std::uint32_t hi) const {
        return lo < netL[q][a] && hi >= netU[q][a];
    }
};

struct CanonicalEngine {
    const RankSpace& rs;
    const std::vector<long long>& T;
    long long minT;
    std::vector<std::uint32_t> lo, hi;

    CanonicalEngine(const RankSpace& r, const std::vector<long long>& t)
        : rs(r), T(t), minT(*std::min_element(t.begin(), t.end())),
          lo(static_cast<std::size_t>(r.d)), hi(static_cast<std::size_t>(r.d)) {}

    BoxRange current() const {
        BoxRange b;
        for (std::size_t a = 0; a < lo.size(); ++a) {
            b.lo.push_back(rs.coords[a][lo[a]]);
            b.hi.push_back(rs.coords[a][hi[a]]);
        }
        return b;
    }

    // last two axes (or the single axis when d = 1) by prefix sums
    void planar(const std::vector<std::size_t>& pts, const std::vector<std::size_t>& nets, Collector& col,
                std::optional<std::uint32_t> only_lo) {
        const std::size_t b = static_cast<std::size_t>(rs.d - 1);
        const bool one_d = rs.d == 1;
        const std::size_t a = one_d ? b : b - 1;
        const std::size_t ma = one_d ? 1 : rs.coords[a].size();
        const std::size_t mb = rs.coords[b].size();
        const std::size_t W = mb + 1;
        std::vector<std::int32_t> S((ma + 1) * W, 0);
        for (auto p : pts) {
            std::size_t ra = one_d ? 0 : rs.rank[p][a];
            S[(ra + 1) * W + rs.rank[p][b] + 1] += 1;
        }
        for (std::size_t i = 1; i <= ma; ++i)
            for (std::size_t j = 1; j <= mb; ++j)
                S[i * W + j] += S[(i - 1) * W + j] + S[i * W + j - 1] - S[(i - 1) * W + j - 1];
        auto cnt = [&](std::size_t l0, std::size_t h0, std::size_t l1, std::size_t h1) -> long long {
            return S[(h0 + 1) * W + h1 + 1] - S[l0 * W + h1 + 1] - S[(h0 + 1) * W + l1] + S[l0 * W + l1];
        };

        std::size_t lo0_begin = 0, lo0_end = ma;
        if (only_lo) {
            lo0_begin = *only_lo;
            lo0_end = *only_lo + 1;
        }
        std::vector<std::size_t> in_a;
        for (std::size_t l0 = lo0_begin; l0 < lo0_end; ++l0) {
            for (std::size_t h0 = l0; h0 < ma; ++h0) {
                if (cnt(l0, h0, 0, mb - 1) < minT) continue;
                if (!one_d) {
                    lo[a] = static_cast<std::uint32_t>(l0);
                    hi[a] = static_cast<std::uint32_t>(h0);
                }
                in_a.clear();
                for (auto q : nets)
                    if (one_d || rs.net_in(q, a, lo[a], hi[a])) in_a.push_back(q);
                std::size_t h1 = 0;
                for (std::size_t l1 = 0; l1 < mb; ++l1) {
                    if (cnt(l0, h0, l1, mb - 1) < minT) break;
                    h1 = std::max(h1, l1);
                    while (cnt(l0, h0, l1, h1) < minT) ++h1;
                    for (std::size_t hh = h1; hh < mb; ++hh) {
                        ++col.examined;
                        std::size_t m = static_cast<std::size_t>(cnt(l0, h0, l1, hh));
                        std::size_t c = 0;
                        for (auto q : in_a)
                            if (rs.net_in(q, b, static_cast<std::uint32_t>(l1), static_cast<std::uint32_t>(hh))) ++c;
                        if (c >= T.size()) continue;
                        lo[b] = static_cast<std::uint32_t>(l1);
                        hi[b] = static_cast<std::uint32_t>(hh);
                        col.offer(m, c, T, [&] { return RangeWitness(current()); });
                    }
                }
            }
        }
    }

    void recurse(std::size_t axis, const std::vector<std::size_t>& pts, const std::vector<std::size_t>& nets,
                 Collector& col, std::optional<std::uint32_t> only_lo) {
        if (static_cast<long long>(pts.size()) < minT) return;
        if (rs.d <= 2 || axis + 2 == static_cast<std::size_t>(rs.d)) {
            planar(pts, nets, col, only_lo);
            return;
        }
        const auto m = static_cast<std::uint32_t>(rs.coords[axis].size());
        std::uint32_t l_begin = only_lo ? *only_lo : 0, l_end = only_lo ? *only_lo + 1 : m;
        std::vector<std::size_t> sub, subnet;
        for (std::uint32_t l = l_begin; l < l_end; ++l) {
            for (std::uint32_t h = l; h < m; ++h) {
                sub.clear();
                for (auto p : pts)
                    if (rs.rank[p][axis] >= l && rs.rank[p][axis] <= h) sub.push_back(p);
                if (static_cast<long long>(sub.size()) < minT) continue;
                subnet.clear();
                for (auto q : nets)
                    if (rs.net_in(q, axis, l, h)) subnet.push_back(q);
                lo[axis] = l;
                hi[axis] = h;
                recurse(axis + 1, sub, subnet, col, std::nullopt);
            }
        }
    }
};

VerificationReport boxes_canonical(const PointSet& P, const WeightedNet& net, const RankSpace& rs,
                                   const std::vector<long long>& T, const VerifyOptions& opt) {
    std::vector<std::size_t> all(P.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<std::size_t> nets(net.points.size());
    for (std::size_t i = 0; i < nets.size(); ++i) nets[i] = i;

    const std::size_t shards = rs.d == 1 ? 1 : rs.coords[0].size();
    std::vector<Collector> parts(shards, Collector(opt.max_reported, T.size()));
    parallel_for(shards, [&](std::size_t s) {
        CanonicalEngine eng(rs, T);
        std::optional<std::uint32_t> only;
        if (rs.d > 1) only = static_cast<std::uint32_t>(s);
        eng.recurse(0, all, nets, parts[s], only);
    }, opt.workers);
    Collector col(opt.max_reported, T.size());
    for (auto& p : parts) col.merge(std::move(p));
    return finish(std::move(col), net.profile, T, "canonical");
}

// ---------- boxes: maximal empty boxes with facets at net coordinates ----------

VerificationReport boxes_maximal(const PointSet& P, const WeightedNet& net, const std::vector<long long>& T,
                                 const VerifyOptions& opt) {
    const int d = P.dim;
    // per axis: candidate bounds, nullopt meaning unbounded
    std::vector<std::vector<std::pair<std::optional<Scalar>, std::optional<Scalar>>>> options(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        std::vector<Scalar> v;
        for (const auto& q : net.points) v.push_back(q[a]);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<std::optional<Scalar>> los{std::nullopt}, his{std::nullopt};
        for (const auto& x : v) {
            los.emplace_back(x);
            his.emplace_back(x);
        }
        for (const auto& l : los)
            for (const auto& h : his)
                if (!l || !h || *l < *h) options[static_cast<std::size_t>(a)].push_back({l, h});
    }
    std::map<std::pair<std::vector<Scalar>, std::vector<Scalar>>, std::pair<std::size_t, std::size_t>> found;
    std::vector<std::size_t> pick(static_cast<std::size_t>(d), 0);
    std::uint64_t examined = 0;
    for (;;) {
        ++examined;
        std::vector<Point> content;
        for (const auto& p : P.points) {
            bool in = true;
            for (int a = 0; a < d && in; ++a) {
                const auto& [l, h] = options[static_cast<std::size_t>(a)][pick[static_cast<std::size_t>(a)]];
                if (l && !(*l < p[a])) in = false;
                if (h && !(p[a] < *h)) in = false;
            }
            if (in) content.push_back(p);
        }
        if (!content.empty()) {
            BoxRange b = bounding_box(content);
            std::size_t c = 0;
            for (const auto& q : net.points)
                if (b.contains(q)) ++c;
            if (!violated_levels(content.size(), c, T).empty()) found[{b.lo, b.hi}] = {content.size(), c};
        }
        std::size_t a = 0;
        while (a < pick.size() && ++pick[a] == options[a].size()) pick[a++] = 0;
        if (a == pick.size()) break;
    }
    Collector col(opt.max_reported, T.size());
    col.examined = examined;
    for (const auto& [key, mc] : found)
        col.offer(mc.first, mc.second, T, [&] { return RangeWitness(BoxRange{key.first, key.second}); });
    return finish(std::move(col), net.profile, T, "maximal-empty");
}

// ---------- convex ranges: t-subsets ----------

struct ConvexContext {
    const PointSet& P;
    const WeightedNet& net;
    std::shared_ptr<const PointSet> base;
    bool masks = false;
    std::vector<planar::AvoidMasks> net_masks, point_masks;

    ConvexContext(const PointSet& p, const WeightedNet& n)
        : P(p), net(n), base(std::make_shared<const PointSet>(p)) {
        masks = P.dim == 2 && P.size() <= 64;
        if (masks) {
            for (const auto& q : net.points) net_masks.emplace_back(P.points, q);
            for (const auto& q : P.points) point_masks.emplace_back(P.points, q);
        }
    }

    std::size_t net_count(const std::vector<std::size_t>& idx, std::uint64_t mask) const {
        std::size_t c = 0;
        if (masks) {
            for (const auto& nm : net_masks)
                if (!nm.avoided_by(mask)) ++c;
            return c;
        }
        std::vector<Point> pts;
        for (auto i : idx) pts.push_back(P.points[i]);
        for (const auto& q : net.points)
            if (point_in_hull(q, pts)) ++c;
        return c;
    }

    std::size_t content(const std::vector<std::size_t>& idx, std::uint64_t mask) const {
        std::size_t m = 0;
        if (masks) {
            for (std::size_t p = 0; p < P.size(); ++p)
                if ((mask >> p) & 1 || !point_masks[p].avoided_by(mask)) ++m;
            return m;
        }
        std::vector<Point> pts;
        for (auto i : idx) pts.push_back(P.points[i]);
        for (const auto& q : P.points)
            if (point_in_hull(q, pts)) ++m;
        return m;
    }
};

}  // namespace

std::uint64_t convex_verification_cost(std::size_t n, const EpsilonProfile& eps, std::uint64_t cap) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        long long t = eps.threshold(i, static_cast<long long>(n));
        if (t > static_cast<long long>(n)) continue;
        total += binomial_capped(n, static_cast<std::uint64_t>(t), cap);
        if (total > cap) return cap + 1;
    }
    return total;
}

VerificationReport verify_weighted_net_boxes(const PointSet& P, const WeightedNet& net, const VerifyOptions& opt) {
    check_net(P, net);
    auto T = thresholds(net.profile, static_cast<long long>(P.size()));
    RankSpace rs(P, net.points);
    bool canonical = opt.box_engine == BoxEngine::Canonical ||
                     (opt.box_engine == BoxEngine::Auto && rs.box_count() <= opt.box_budget);
    if (opt.box_engine == BoxEngine::Canonical && rs.box_count() > opt.box_budget)
        throw BudgetExceeded("canonical box enumeration needs " + std::to_string(rs.box_count()) +
                             " boxes, budget is " + std::to_string(opt.box_budget));
    return canonical ? boxes_canonical(P, net, rs, T, opt) : boxes_maximal(P, net, T, opt);
}

VerificationReport verify_weighted_net_convex(const PointSet& P, const WeightedNet& net, const VerifyOptions& opt) {
    check_net(P, net);
    const std::size_t n = P.size();
    auto T = thresholds(net.profile, static_cast<long long>(n));
    std::uint64_t cost = convex_verification_cost(n, net.profile, std::uint64_t(1) << 62);
    if (cost > opt.convex_budget) {
        std::size_t fits = 0;
        for (std::size_t m = n; m-- > 1;)
            if (convex_verification_cost(m, net.profile, opt.convex_budget) <= opt.convex_budget) {
                fits = m;
                break;
            }
        throw BudgetExceeded("convex verification needs " + std::to_string(cost) + " subset hulls, budget is " +
                             std::to_string(opt.convex_budget) + "; rerun with --budget " + std::to_string(cost) +
                             (fits ? " or use at most " + std::to_string(fits) + " points at this profile" : ""));
    }
    ConvexContext ctx(P, net);
    Collector col(opt.max_reported, T.size());
    for (std::size_t lvl = 0; lvl < T.size(); ++lvl) {
        if (T[lvl] > static_cast<long long>(n)) continue;
        const std::size_t t = static_cast<std::size_t>(T[lvl]);
        // shard by the smallest index of the subset
        std::vector<Collector> parts(n, Collector(opt.max_reported, T.size()));
        parallel_for(n - t + 1, [&](std::size_t i0) {
            Collector& out = parts[i0];
            std::vector<std::size_t> idx(t);
            idx[0] = i0;
            for (std::size_t j = 1; j < t; ++j) idx[j] = i0 + j;
            for (;;) {
                std::uint64_t mask = 0;
                if (ctx.masks)
                    for (auto i : idx) mask |= std::uint64_t(1) << i;
                ++out.examined;
                std::size_t c = ctx.net_count(idx, mask);
                if (c < lvl + 1) {
                    ++out.per_level[lvl];
                    ++out.total;
                    if (out.first.size() < out.K) {
                        std::size_t m = ctx.content(idx, mask);
                        out.first.push_back(Violation{c + 1, violated_levels(m, c, T), SubsetHull{ctx.base, idx}, c, m});
                    }
                }
                std::size_t i = t;
                while (i > 1 && idx[i - 1] == n - t + i - 1) --i;
                if (i == 1) break;
                ++idx[i - 1];
                for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
            }
        }, opt.workers);
        for (auto& p : parts) col.merge(std::move(p));
    }
    return finish(std::move(col), net.profile, T, ctx.masks ? "subsets-planar" : "subsets-lp");
}

VerificationReport verify_weighted_net(const PointSet& P, const WeightedNet& net, RangeSpaceKind kind,
                                       const VerifyOptions& opt) {
    return kind == RangeSpaceKind::ConvexSets ? verify_weighted_net_convex(P, net, opt)
                                              : verify_weighted_net_boxes(P, net, opt);
}

bool recheck(const PointSet& P, const WeightedNet& net, const Violation& v) {
    auto T = thresholds(net.profile, static_cast<long long>(P.size()));
    std::size_t m = 0, c = 0;
    if (auto* b = std::get_if<BoxRange>(&v.range)) {
        m = count_in_box(P, *b);
        for (const auto& q : net.points)
            if (b->contains(q)) ++c;
    } else {
        auto pts = std::get<SubsetHull>(v.range).points();
        for (const auto& p : P.points)
            if (point_in_hull(p, pts)) ++m;
        for (const auto& q : net.points)
            if (point_in_hull(q, pts)) ++c;
    }
    if (m != v.points_inside || c != v.net_inside) return false;
    auto lv = violated_levels(m, c, T);
    return !lv.empty() && lv == v.levels && lv.front() == v.level;
}

std::optional<std::pair<Point, Point>> pierceable_by_two(const std::vector<ConvexSet>& family,
                                                         std::size_t max_members) {
    const std::size_t m = family.size();
    if (m == 0) throw InvalidInput("pierceable_by_two: empty family");
    if (m > max_members || m > 63)
        throw BudgetExceeded("pierceable_by_two: " + std::to_string(m) + " members exceed the partition budget of " +
                             std::to_string(max_members));
    using Mask = std::uint64_t;
    std::vector<Mask> adj(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        adj[i] |= Mask(1) << i;
        for (std::size_t j = i + 1; j < m; ++j)
            if (polytopes_intersect({family[i], family[j]})) {
                adj[i] |= Mask(1) << j;
                adj[j] |= Mask(1) << i;
            }
    }
    const Mask all = (Mask(1) << m) - 1;
    auto clique = [&](Mask g) {
        for (Mask r = g; r; r &= r - 1)
            if ((g & ~adj[static_cast<std::size_t>(std::countr_zero(r))]) != 0) return false;
        return true;
    };
    std::unordered_map<Mask, std::optional<Point>> cache;
    auto common = [&](Mask g) -> const std::optional<Point>& {
        auto it = cache.find(g);
        if (it != cache.end()) return it->second;
        std::vector<ConvexSet> sub;
        for (std::size_t i = 0; i < m; ++i)
            if ((g >> i) & 1) sub.push_back(family[i]);
        return cache[g] = polytopes_intersect(sub);
    };
    // G always contains member 0; enumerate the rest in increasing mask order
    for (Mask rest = 0; rest <= (all >> 1); ++rest) {
        Mask g = 1 | (rest << 1);
        Mask h = all & ~g;
        if (!clique(g) || !clique(h)) continue;
        const auto& x = common(g);
        if (!x) continue;
        if (h == 0) return std::make_pair(*x, *x);
        const auto& y = common(h);
        if (y) return std::make_pair(*x, *y);
    }
    return std::nullopt;
}

std::optional<Violation> adversarial_search(const PointSet& P, const WeightedNet& net, RangeSpaceKind kind,
                                            std::uint64_t trials, std::uint64_t seed) {
    check_net(P, net);
    const std::size_t n = P.size();
    auto T = thresholds(net.profile, static_cast<long long>(n));
    std::mt19937_64 rng(seed);
    auto shared = std::make_shared<const PointSet>(P);

    std::vector<std::vector<Scalar>> coords(static_cast<std::size_t>(P.dim));
    for (int a = 0; a < P.dim; ++a) {
        auto& c = coords[static_cast<std::size_t>(a)];
        for (const auto& p : P.points) c.push_back(p[a]);
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::vector<std::size_t> order(n);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        if (kind == RangeSpaceKind::AxisParallelBoxes) {
            BoxRange b;
            for (const auto& c : coords) {
                std::uniform_int_distribution<std::size_t> pick(0, c.size() - 1);
                std::size_t i = pick(rng), j = pick(rng);
                if (i > j) std::swap(i, j);
                b.lo.push_back(c[i]);
                b.hi.push_back(c[j]);
            }
            std::size_t m = count_in_box(P, b), c = 0;
            for (const auto& q : net.points)
                if (b.contains(q)) ++c;
            auto lv = violated_levels(m, c, T);
            if (!lv.empty()) {
                Violation v{lv.front(), lv, b, c, m};
                if (recheck(P, net, v)) return v;
            }
        } else {
            // grow a random subset greedily while it keeps fewer than `level` net points
            const std::size_t level = 1 + static_cast<std::size_t>(trial % T.size());
            for (std::size_t i = 0; i < n; ++i) order[i] = i;
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::size_t> S;
            std::vector<Point> pts;
            for (auto i : order) {
                pts.push_back(P.points[i]);
                std::size_t c = 0;
                for (const auto& q : net.points)
                    if (point_in_hull(q, pts)) ++c;
                if (c < level)
                    S.push_back(i);
                else
                    pts.pop_back();
            }
            std::size_t m = 0, c = 0;
            for (const auto& p : P.points)
                if (point_in_hull(p, pts)) ++m;
            for (const auto& q : net.points)
                if (point_in_hull(q, pts)) ++c;
            auto lv = violated_levels(m, c, T);
            if (!lv.empty()) {
                std::sort(S.begin(), S.end());
                Violation v{lv.front(), lv, SubsetHull{shared, S}, c, m};
                if (recheck(P, net, v)) return v;
            }
        }
    }
    return std::nullopt;
}

}  // namespace epsnet
