#include "support.hpp"

#include "epsnet/constructions.hpp"

#include <catch_amalgamated.hpp>

using namespace epsnet;
using namespace testing_support;

namespace {

PointSet transform(const PointSet& P, const Scalar& scale, const Point& shift) {
    PointSet Q = P;
    for (auto& p : Q.points)
        for (std::size_t a = 0; a < p.size(); ++a) p[a] = p[a] * scale + shift[a];
    return Q;
}

Point transform(Point p, const Scalar& scale, const Point& shift) {
    for (std::size_t a = 0; a < p.size(); ++a) p[a] = p[a] * scale + shift[a];
    return p;
}

EpsilonProfile prof(std::initializer_list<Scalar> e) { return EpsilonProfile(std::vector<Scalar>(e)); }

}  // namespace

TEST_CASE("condition checks name the failing inequality") {
    CHECK(check_thm1_conditions(2, prof({Scalar(3, 5), Scalar(4, 5)})));
    auto f = thm1_condition_failure(2, prof({Scalar(1, 2), Scalar(4, 5)}));
    CHECK(f.find("(ii)") != std::string::npos);
    CHECK(f.find("1/2 < 3/5") != std::string::npos);
    CHECK(thm1_condition_failure(3, prof({Scalar(5, 7), Scalar(6, 7)})).empty());
    CHECK(thm1_condition_failure(3, prof({Scalar(5, 7), Scalar(5, 7)})).find("(i)") != std::string::npos);
    CHECK(box_pair_condition_failure(2, prof({Scalar(3, 7), Scalar(4, 7)})).empty());
    CHECK(box_pair_condition_failure(2, prof({Scalar(2, 5), Scalar(4, 5)})).find("(i)") != std::string::npos);
    CHECK(box_pair_condition_failure(2, prof({Scalar(3, 7), Scalar(1, 2)})).find("(ii)") != std::string::npos);
    CHECK(box_pair_condition_failure(3, prof({Scalar(9, 19), Scalar(10, 19)})).empty());
    CHECK(box_triple_condition_failure(prof({Scalar(3, 8), Scalar(1, 2), Scalar(5, 8)})).empty());
    CHECK(box_triple_condition_failure(prof({Scalar(1, 3), Scalar(1, 2), Scalar(5, 8)})).find("(i)") != std::string::npos);
    CHECK(box_triple_condition_failure(prof({Scalar(3, 8), Scalar(1, 2), Scalar(1, 2)})).find("(iii)") != std::string::npos);

    std::mt19937_64 rng(1);
    auto P = random_general_points(rng, 10, 2);
    CHECK_THROWS_AS(construct_convex_pair(P, prof({Scalar(1, 2), Scalar(4, 5)})), InvalidInput);
    CHECK_THROWS_AS(construct_box_pair_2d(P, prof({Scalar(1, 3), Scalar(2, 3)})), InvalidInput);
    CHECK_THROWS_AS(construct_box_triple_2d(P, prof({Scalar(3, 8), Scalar(1, 2), Scalar(1, 2)})), InvalidInput);
}

TEST_CASE("median point is a half-net for boxes") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        std::uniform_int_distribution<int> dd(1, 3);
        std::uniform_int_distribution<std::size_t> nd(1, 30);
        auto P = random_points(rng, nd(rng), dd(rng), 15, false);
        auto net = box_median_point(P);
        REQUIRE(net.points.size() == 1);
        CHECK(net.profile[0] == Scalar(1, 2));
        CHECK(verify_weighted_net_boxes(P, net).passed());
    }
    PointSet one(1, {pt({1}), pt({2}), pt({3}), pt({4})});
    CHECK(box_median_point(one).points[0] == pt({2}));
}

TEST_CASE("box pair in the plane passes the exact verifier") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::uniform_int_distribution<std::size_t> nd(7, 40);
        auto P = random_points(rng, nd(rng), 2, 1000, true);
        auto c = construct_box_pair_2d(P, prof({Scalar(3, 7), Scalar(4, 7)}));
        REQUIRE(c.net.points.size() == 2);
        CHECK(verify_weighted_net_boxes(P, c.net).passed());
    }
    // other admissible profiles
    for (int trial = 0; trial < 30; ++trial) {
        auto P = random_points(rng, 25, 2, 1000, true);
        auto c = construct_box_pair_2d(P, prof({Scalar(1, 2), Scalar(1, 2)}));
        CHECK(verify_weighted_net_boxes(P, c.net).passed());
    }
}

TEST_CASE("box pair in higher dimensions is either certified or reports failure") {
    std::mt19937_64 rng(7);
    std::size_t built = 0;
    for (int trial = 0; trial < 30; ++trial) {
        auto P = random_points(rng, 20, 3, 1000, true);
        try {
            auto c = construct_box_pair_highd(P, prof({Scalar(9, 19), Scalar(10, 19)}));
            CHECK(verify_weighted_net_boxes(P, c.net).passed());
            ++built;
        } catch (const ConstructionFailure& f) {
            CHECK(!f.trace.notes.empty());
        }
    }
    CHECK(built > 0);
}

TEST_CASE("box triple in the plane passes the exact verifier") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> nd(8, 40);
        auto P = random_points(rng, nd(rng), 2, 1000, true);
        auto c = construct_box_triple_2d(P, prof({Scalar(3, 8), Scalar(1, 2), Scalar(5, 8)}));
        REQUIRE(c.net.points.size() == 3);
        CHECK(verify_weighted_net_boxes(P, c.net).passed());
    }
}

TEST_CASE("convex pair passes the exact verifier") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> nd(5, 13);
        auto P = random_general_points(rng, nd(rng), 2);
        auto c = construct_convex_pair(P, prof({Scalar(3, 5), Scalar(4, 5)}));
        REQUIRE(c.net.points.size() == 2);
        CHECK(verify_weighted_net_convex(P, c.net).passed());
    }
    PointSet collinear(2, {pt({0, 0}), pt({1, 1}), pt({2, 2}), pt({3, 5}), pt({5, 3})});
    CHECK_THROWS_AS(construct_convex_pair(collinear, prof({Scalar(3, 5), Scalar(4, 5)})), InvalidInput);
}

TEST_CASE("convex pair in three dimensions") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        auto P = random_general_points(rng, 8, 3, 50);
        auto c = construct_convex_pair(P, prof({Scalar(5, 7), Scalar(6, 7)}));
        CHECK(verify_weighted_net_convex(P, c.net).passed());
    }
}

TEST_CASE("constructions commute with scaling and translation") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        auto P = random_general_points(rng, 12, 2, 500);
        Scalar s(3, 2);
        Point shift = {Scalar(7), Scalar(-11, 3)};
        auto Q = transform(P, s, shift);
        auto check = [&](const WeightedNet& a, const WeightedNet& b) {
            REQUIRE(a.points.size() == b.points.size());
            for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(transform(a.points[i], s, shift) == b.points[i]);
        };
        check(box_median_point(P), box_median_point(Q));
        auto e2 = prof({Scalar(3, 7), Scalar(4, 7)});
        check(construct_box_pair_2d(P, e2).net, construct_box_pair_2d(Q, e2).net);
        auto e3 = prof({Scalar(3, 8), Scalar(1, 2), Scalar(5, 8)});
        check(construct_box_triple_2d(P, e3).net, construct_box_triple_2d(Q, e3).net);
        auto ec = prof({Scalar(3, 5), Scalar(4, 5)});
        check(construct_convex_pair(P, ec).net, construct_convex_pair(Q, ec).net);
    }
}

TEST_CASE("a passing net keeps passing at larger epsilon") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        auto P = random_points(rng, 20, 2, 1000, true);
        auto c = construct_box_pair_2d(P, prof({Scalar(3, 7), Scalar(4, 7)}));
        WeightedNet looser{c.net.points, prof({Scalar(1, 2), Scalar(3, 4)})};
        CHECK(verify_weighted_net_boxes(P, looser).passed());
        // and a net failing at some level keeps failing at smaller epsilon
        WeightedNet tight{c.net.points, prof({Scalar(1, 100), Scalar(1, 100)})};
        CHECK_FALSE(verify_weighted_net_boxes(P, tight).passed());
    }
}

TEST_CASE("traces record the construction steps") {
    std::mt19937_64 rng(23);
    auto P = random_points(rng, 35, 2, 1000, true);
    auto c = construct_box_pair_2d(P, prof({Scalar(3, 7), Scalar(4, 7)}));
    CHECK_FALSE(c.trace.counts.empty());
    CHECK_FALSE(c.trace.hyperplanes.empty());
    bool saw_t1 = false;
    for (const auto& [name, v] : c.trace.counts)
        if (name == "T1") {
            saw_t1 = true;
            CHECK(v == 15);
        }
    CHECK(saw_t1);
}
