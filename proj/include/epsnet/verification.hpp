#pragma once

#include "epsnet/ranges.hpp"

#include <string>
#include <variant>

namespace epsnet {

using RangeWitness = std::variant<BoxRange, SubsetHull>;

struct Violation {
    std::size_t level = 0;            // lowest violated level, 1-based
    std::vector<std::size_t> levels;  // every level this range violates
    RangeWitness range;
    std::size_t net_inside = 0;
    std::size_t points_inside = 0;
};

struct LevelVerdict {
    std::size_t level = 0;
    Scalar eps;
    long long threshold = 0;  // heavy ranges contain at least this many points
    bool pass = true;
    std::uint64_t violations = 0;
};

struct ClaimResult {
    std::string name;
    std::string kind;
    std::string statement;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<LevelVerdict> levels;
    std::vector<Violation> violations;  // first few, ordered by range order
    std::uint64_t total_violations = 0;
    bool truncated = false;
    std::uint64_t ranges_examined = 0;
    std::string engine;
    std::vector<ClaimResult> claims;

    bool passed() const;
};

enum class BoxEngine { Auto, Canonical, MaximalEmpty };

struct VerifyOptions {
    std::size_t max_reported = 16;
    std::uint64_t box_budget = 50'000'000;     // canonical boxes before switching engines
    std::uint64_t convex_budget = 2'000'000;   // t-subsets over all levels
    BoxEngine box_engine = BoxEngine::Auto;
    unsigned workers = 0;                      // 0: EPSNET_THREADS / hardware
};

Scalar counting_bound(long long n, long long k, long long l, const EpsilonProfile& eps);

VerificationReport verify_weighted_net_boxes(const PointSet& P, const WeightedNet& net,
                                             const VerifyOptions& opt = {});

VerificationReport verify_weighted_net_convex(const PointSet& P, const WeightedNet& net,
                                              const VerifyOptions& opt = {});

VerificationReport verify_weighted_net(const PointSet& P, const WeightedNet& net, RangeSpaceKind kind,
                                       const VerifyOptions& opt = {});

// Number of t-subsets the convex verifier would enumerate.
std::uint64_t convex_verification_cost(std::size_t n, const EpsilonProfile& eps, std::uint64_t cap);

// Recount points and net points inside the witness and confirm the levels.
bool recheck(const PointSet& P, const WeightedNet& net, const Violation& v);

std::optional<std::pair<Point, Point>> pierceable_by_two(const std::vector<ConvexSet>& family,
                                                         std::size_t max_members = 24);

std::optional<Violation> adversarial_search(const PointSet& P, const WeightedNet& net, RangeSpaceKind kind,
                                            std::uint64_t trials, std::uint64_t seed);

}  // namespace epsnet
