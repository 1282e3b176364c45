#pragma once

#include "epsnet/verification.hpp"

#include <map>
#include <string>

namespace epsnet {

enum class ClaimKind { EmptyIntersection, PairwiseDisjoint, StrictSide, Membership, Count, NotTwoPierceable, OracleThreshold };

std::string to_string(ClaimKind k);

struct CertifiedClaim {
    std::string name;
    ClaimKind kind = ClaimKind::EmptyIntersection;
    std::string statement;
    std::vector<std::string> operands;  // witness names
    // StrictSide: the intersection of the operands lies in this open halfspace
    std::optional<Halfspace> halfspace;
    // Membership: whether `point` lies in the single operand
    std::optional<Point> point;
    bool expect_inside = false;
    // Count: |operand ∩ P|
    std::size_t expected_count = 0;
    // OracleThreshold: every avoid-list leaves at least `threshold` points avoidable
    std::vector<std::vector<Point>> samples;
    std::size_t threshold = 0;
};

struct GadgetInstance {
    std::string name;
    std::shared_ptr<const PointSet> points;
    std::map<std::string, std::string> parameters;
    std::vector<std::pair<std::string, ConvexSet>> witnesses;
    std::vector<CertifiedClaim> claims;
    // 2D outlines for rendering, in the xy-plane
    std::vector<std::pair<std::string, std::vector<Point>>> outlines;

    const ConvexSet& witness(const std::string& name) const;
};

// Five clusters of k points at the corners of a pentagon; delta is the cluster diameter.
GadgetInstance gadget_five_clusters(std::size_t k, const Scalar& delta = Scalar(1, 100));

// Hexagon in z = 0 with one pole above and one below.
GadgetInstance gadget_hexagon_3d(std::size_t oracle_samples = 2000, std::uint64_t seed = 1);

// (d-1)-simplex in x_d = 0 with one pole on each side, d >= 3.
GadgetInstance gadget_simplex(int d, std::size_t samples = 200, std::uint64_t seed = 1);

VerificationReport certify(const GadgetInstance& g);
ClaimResult check_claim(const GadgetInstance& g, const CertifiedClaim& c);

// Same witnesses and claims over moved points (point order must match).
GadgetInstance rebase(const GadgetInstance& g, PointSet moved);

// The five regions l+ ∩ l- of the five-cluster gadget.
std::vector<ConvexSet> five_cluster_regions(const GadgetInstance& g);

}  // namespace epsnet
