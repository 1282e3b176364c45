#include "support.hpp"

#include <catch_amalgamated.hpp>

using namespace epsnet;
using namespace testing_support;

TEST_CASE("box containment and counting") {
    BoxRange b{{Scalar(0), Scalar(0)}, {Scalar(2), Scalar(3)}};
    CHECK(b.contains(pt({0, 3})));
    CHECK(b.contains(pt({1, 1})));
    CHECK_FALSE(b.contains(pt({3, 1})));
    auto bb = bounding_box({pt({1, 5}), pt({-2, 0}), pt({4, 2})});
    CHECK(bb.lo == pt({-2, 0}));
    CHECK(bb.hi == pt({4, 5}));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> dd(1, 3);
        int d = dd(rng);
        auto P = random_points(rng, 25, d, 20, false);
        auto corners = random_points(rng, 2, d, 22, false);
        Point lo = corners[0], hi = corners[1];
        for (std::size_t a = 0; a < lo.size(); ++a)
            if (lo[a] > hi[a]) std::swap(lo[a], hi[a]);
        BoxRange box{lo, hi};
        std::size_t naive = 0;
        for (const auto& p : P.points) naive += in_box(p, lo, hi);
        CHECK(count_in_box(P, box) == naive);
        BoxCounter counter(P);
        CHECK(counter.count(box) == naive);
    }
}

TEST_CASE("epsilon profiles") {
    EpsilonProfile e({Scalar(3, 7), Scalar(4, 7)});
    CHECK(e.threshold(0, 70) == 31);
    CHECK(e.threshold(1, 70) == 41);
    CHECK(e.threshold(0, 14) == 7);
    CHECK_THROWS_AS(EpsilonProfile({Scalar(1, 2), Scalar(1, 3)}), InvalidInput);
    CHECK_THROWS_AS(EpsilonProfile({Scalar(-1, 2)}), InvalidInput);
}

// all coordinate-facet boxes, by nested loops over sorted distinct coordinates
void facet_boxes(const PointSet& P, std::size_t axis, Point& lo, Point& hi, std::size_t min_count, std::set<BoxKey>& out) {
    if (axis == static_cast<std::size_t>(P.dim)) {
        std::size_t c = 0;
        for (const auto& p : P.points) c += in_box(p, lo, hi);
        if (c >= min_count) out.insert({lo, hi});
        return;
    }
    std::set<Scalar> cs;
    for (const auto& p : P.points) cs.insert(p[axis]);
    for (auto a = cs.begin(); a != cs.end(); ++a)
        for (auto b = a; b != cs.end(); ++b) {
            lo[axis] = *a;
            hi[axis] = *b;
            facet_boxes(P, axis + 1, lo, hi, min_count, out);
        }
}

TEST_CASE("canonical boxes cover subset bounding boxes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 80; ++trial) {
        std::uniform_int_distribution<int> dd(1, 3);
        std::uniform_int_distribution<std::size_t> nd(1, 9), md(1, 6);
        int d = dd(rng);
        auto P = random_points(rng, nd(rng), d, 6, trial % 2 == 0);
        std::size_t min_count = std::min(md(rng), P.size());
        std::set<BoxKey> got;
        auto stream = enumerate_canonical_boxes(P, min_count);
        std::size_t produced = 0;
        while (auto b = stream.next()) {
            got.insert({b->lo, b->hi});
            ++produced;
        }
        CHECK(produced == got.size());  // no box twice
        for (const auto& key : subset_box_oracle(P, min_count)) CHECK(got.count(key) == 1);
        std::set<BoxKey> all;
        Point lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
        facet_boxes(P, 0, lo, hi, min_count, all);
        CHECK(got == all);
    }
    PointSet three(2, {pt({0, 0}), pt({1, 2}), pt({2, 1})});
    auto s = enumerate_canonical_boxes(three, 4);
    CHECK_FALSE(s.next());
    auto full = enumerate_canonical_boxes(three, 3);
    auto b = full.next();
    REQUIRE(b);
    CHECK(b->lo == pt({0, 0}));
    CHECK(b->hi == pt({2, 2}));
}

TEST_CASE("canonical box order is lexicographic") {
    PointSet P(2, {pt({0, 0}), pt({1, 2}), pt({2, 1})});
    auto s = enumerate_canonical_boxes(P, 1);
    std::vector<BoxRange> boxes;
    while (auto b = s.next()) boxes.push_back(*b);
    REQUIRE(!boxes.empty());
    CHECK(boxes.front().lo == pt({0, 0}));
    for (std::size_t i = 1; i < boxes.size(); ++i) {
        auto key = [](const BoxRange& b) {
            return std::vector<Scalar>{b.lo[0], b.hi[0], b.lo[1], b.hi[1]};
        };
        CHECK(key(boxes[i - 1]) < key(boxes[i]));
    }
}

TEST_CASE("t-subsets are enumerated once in lexicographic order") {
    auto P = share(PointSet(2, {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({2, 2})}));
    for (std::size_t t = 1; t <= 5; ++t) {
        auto s = minimal_convex_ranges(P, t);
        std::vector<std::vector<std::size_t>> all;
        while (auto h = s.next()) all.push_back(h->indices);
        CHECK(all.size() == binomial_capped(5, t, 1000));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
    CHECK(binomial_capped(30, 15, 1000) == 1001);  // capped at cap + 1
    CHECK(binomial_capped(10, 3, 1'000'000) == 120);
}

TEST_CASE("max_subset_avoiding examples") {
    // square with a centre point
    PointSet sq(2, {pt({0, 0}), pt({2, 0}), pt({2, 2}), pt({0, 2})});
    CHECK(max_subset_avoiding(sq, {pt({1, 1})}) == 2);  // every triangle has the centre on its diagonal
    CHECK(max_subset_avoiding(sq, {pt({1, 3})}) == 4);
    PointSet sq5(2, {pt({0, 0}), pt({4, 0}), pt({4, 4}), pt({0, 4}), pt({1, 2})});
    CHECK(max_subset_avoiding(sq5, {pt({3, 2})}) == 4);
    CHECK(max_subset_avoiding(sq, {pt({5, 5})}) == 4);
    CHECK(max_subset_avoiding(sq, {pt({0, 0})}) == 3);
    CHECK(max_subset_avoiding(sq, {}) == 4);
    PointSet line(1, {pt({1}), pt({2}), pt({3}), pt({4}), pt({5})});
    CHECK(max_subset_avoiding(line, {pt({2})}) == 3);
    CHECK(max_subset_avoiding(line, {pt({2}), pt({4})}) == 1);
}

TEST_CASE("max_subset_avoiding equals the 2^n oracle") {
    std::mt19937_64 rng(41);
    for (int d = 1; d <= 3; ++d)
        for (int trial = 0; trial < (d == 3 ? 40 : 80); ++trial) {
            std::uniform_int_distribution<std::size_t> nd(1, d == 3 ? 8 : 10), ad(1, 2);
            auto P = random_points(rng, nd(rng), d, 5, false);
            std::vector<Point> avoid;
            for (std::size_t i = ad(rng); i > 0; --i) {
                // mix arbitrary points, data points and midpoints
                std::uniform_int_distribution<int> mode(0, 2);
                int m = mode(rng);
                if (m == 0) avoid.push_back(random_points(rng, 1, d, 5, false)[0]);
                else if (m == 1) avoid.push_back(P[0]);
                else {
                    Point mid = P[0];
                    for (std::size_t a = 0; a < mid.size(); ++a) mid[a] = (P[0][a] + P[P.size() - 1][a]) / 2;
                    avoid.push_back(mid);
                }
            }
            CHECK(max_subset_avoiding(P, avoid) == max_avoiding_oracle(P, avoid));
        }
}

TEST_CASE("separable candidates are separable and cover maximal sets") {
    std::mt19937_64 rng(43);
    for (int d = 2; d <= 3; ++d)
        for (int trial = 0; trial < 40; ++trial) {
            auto P = random_points(rng, 7, d, 4, false);
            auto q = random_points(rng, 1, d, 4, false)[0];
            auto cands = separable_candidates(P, q);
            for (auto m : cands) CHECK_FALSE(hull_oracle(q, subset_points(P, m)));
            for (std::uint64_t m = 1; m < 128; ++m) {
                if (hull_oracle(q, subset_points(P, m))) continue;
                bool covered = std::any_of(cands.begin(), cands.end(), [&](std::uint64_t c) { return (m & ~c) == 0; });
                CHECK(covered);
            }
        }
}
