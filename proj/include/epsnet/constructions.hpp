#pragma once

#include "epsnet/ranges.hpp"

#include <string>

namespace epsnet {

enum class ConvexRangeClass { ClassA, ClassB, Both };

struct ConstructionTrace {
    std::vector<std::pair<std::string, Hyperplane>> hyperplanes;
    std::vector<std::pair<std::string, long long>> counts;
    std::vector<std::pair<std::string, Point>> witnesses;
    std::vector<std::string> notes;

    void count(std::string name, long long v) { counts.emplace_back(std::move(name), v); }
};

struct Construction {
    WeightedNet net;
    ConstructionTrace trace;
};

// The construction ran but could not produce a net; the trace says where.
struct ConstructionFailure : std::runtime_error {
    ConstructionTrace trace;
    ConstructionFailure(const std::string& what, ConstructionTrace t)
        : std::runtime_error(what), trace(std::move(t)) {}
};

// Empty string when the conditions hold, otherwise the failing inequality.
std::string thm1_condition_failure(int d, const EpsilonProfile& eps);
bool check_thm1_conditions(int d, const EpsilonProfile& eps);
std::string box_pair_condition_failure(int d, const EpsilonProfile& eps);
std::string box_triple_condition_failure(const EpsilonProfile& eps);

Construction construct_convex_pair(const PointSet& P, const EpsilonProfile& eps,
                                   std::uint64_t budget = 2'000'000);

WeightedNet box_median_point(const PointSet& P);

Construction construct_box_pair_2d(const PointSet& P, const EpsilonProfile& eps);
Construction construct_box_pair_highd(const PointSet& P, const EpsilonProfile& eps);
Construction construct_box_triple_2d(const PointSet& P, const EpsilonProfile& eps);

}  // namespace epsnet
