#include "support.hpp"

#include "epsnet/io.hpp"
#include "epsnet/svg.hpp"

#include <catch_amalgamated.hpp>

#include <filesystem>

using namespace epsnet;
using namespace testing_support;

TEST_CASE("point sets keep exact values") {
    auto P = parse_point_set(R"({"dim": 2, "points": [[0.1, "1/3"], [1e-3, -2], ["-4/6", 123456789012345678901234567890]]})");
    REQUIRE(P.size() == 3);
    CHECK(P[0][0] == Scalar(1, 10));
    CHECK(P[0][1] == Scalar(1, 3));
    CHECK(P[1][0] == Scalar(1, 1000));
    CHECK(P[1][1] == -2);
    CHECK(P[2][0] == Scalar(-2, 3));
    CHECK(P[2][1] == Scalar(mpz_class("123456789012345678901234567890")));
    CHECK(format_scalar(P[2][0]) == "-2/3");
}

TEST_CASE("point sets round trip") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> dd(1, 4);
        auto P = random_points(rng, 12, dd(rng), 1000, false);
        for (auto& p : P.points) p[0] /= 7;
        auto text = point_set_json(P);
        auto Q = parse_point_set(text);
        CHECK(Q.dim == P.dim);
        CHECK(Q.points == P.points);
        CHECK(point_set_json(Q) == text);
    }
}

TEST_CASE("malformed point sets are rejected") {
    for (const char* bad : {R"({"dim": 2})", R"({"points": []})", R"({"dim": 2, "points": [[1]]})",
                            R"({"dim": 0, "points": []})", R"({"dim": 1.5, "points": []})",
                            R"({"dim": 1, "points": [["1/0"]]})", R"({"dim": 1, "points": [["abc"]]})",
                            R"({"dim": 1, "points": [[true]]})", R"({"dim": 1, "points": [[1]] )", "[1, 2]"})
        CHECK_THROWS_AS(parse_point_set(bad), InvalidInput);
    CHECK_THROWS_AS(read_point_set("/nonexistent/points.json"), InvalidInput);
}

TEST_CASE("files are written atomically and hashed") {
    auto dir = std::filesystem::temp_directory_path() / "epsnet_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "x.txt").string();
    write_file(path, "first");
    write_file(path, "abc");
    CHECK(read_file(path) == "abc");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    std::filesystem::remove_all(dir);
}

TEST_CASE("reports list verdicts consistent with violations") {
    std::mt19937_64 rng(7);
    auto P = random_points(rng, 10, 2, 100, true);
    WeightedNet far{{pt({500, 500}), pt({600, 600})}, EpsilonProfile({Scalar(1, 2), Scalar(3, 4)})};
    auto rep = verify_weighted_net_boxes(P, far);
    auto j = report_json(rep);
    REQUIRE(j.contains("levels"));
    REQUIRE(j["levels"].size() == 2);
    for (const auto& l : j["levels"]) CHECK_FALSE(l["pass"].get<bool>());
    CHECK(j["violations"].size() > 0);
    CHECK(dump(j).back() == '\n');
    auto again = dump(report_json(verify_weighted_net_boxes(P, far)));
    CHECK(again == dump(j));
}

TEST_CASE("claims export names every witness") {
    auto g = gadget_five_clusters(1);
    auto j = claims_json(g);
    REQUIRE(j.contains("witnesses"));
    REQUIRE(j.contains("claims"));
    CHECK(j["claims"].size() == g.claims.size());
    CHECK(j["witnesses"].size() == g.witnesses.size());
}

TEST_CASE("svg output is deterministic and plain") {
    std::mt19937_64 rng(9);
    auto P = random_points(rng, 15, 2, 100, true);
    WeightedNet net{{pt({0, 0})}, EpsilonProfile({Scalar(1, 2)})};
    auto a = render_svg(P, &net);
    CHECK(a == render_svg(P, &net));
    CHECK(a.rfind("<?xml", 0) == 0);
    CHECK(a.find("-0.000") == std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
    auto P3 = random_points(rng, 5, 3, 10, true);
    CHECK_NOTHROW(render_svg(P3));
    auto P1 = random_points(rng, 5, 1, 10, true);
    CHECK_THROWS_AS(render_svg(P1), InvalidInput);
}
