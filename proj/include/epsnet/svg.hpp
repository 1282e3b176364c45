#pragma once

#include "epsnet/ranges.hpp"

#include <string>

namespace epsnet {

struct SvgExtras {
    std::vector<std::pair<std::string, std::vector<Point>>> regions;  // polygons in the xy-plane
    std::vector<Point> crosses;                                       // extra cross marks
};

// Points as dots, net points as crosses, regions as translucent polygons.
// 3D input is drawn as its projection to the xy-plane.
std::string render_svg(const PointSet& P, const WeightedNet* net = nullptr, const SvgExtras& extras = {});

}  // namespace epsnet
