#include "epsnet/svg.hpp"

#include <algorithm>
#include <cstdio>

namespace epsnet {

namespace {

const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const PointSet& P, const WeightedNet* net, const SvgExtras& extras) {
    if (P.dim != 2 && P.dim != 3) throw InvalidInput("SVG rendering supports 2D and projected 3D instances only");
    std::vector<Point> all;
    for (const auto& p : P.points) all.push_back({p[0], p[1]});
    if (net)
        for (const auto& p : net->points) all.push_back({p[0], p[1]});
    for (const auto& [name, poly] : extras.regions)
        for (const auto& p : poly) all.push_back({p[0], p[1]});
    for (const auto& p : extras.crosses) all.push_back({p[0], p[1]});

    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!all.empty()) {
        x0 = x1 = all[0][0].get_d();
        y0 = y1 = all[0][1].get_d();
        for (const auto& p : all) {
            x0 = std::min(x0, p[0].get_d());
            x1 = std::max(x1, p[0].get_d());
            y0 = std::min(y0, p[1].get_d());
            y1 = std::max(y1, p[1].get_d());
        }
    }
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    double margin = span * 0.05;
    x0 -= margin;
    y0 -= margin;
    span += 2 * margin;
    const double size = 800;
    auto sx = [&](const Scalar& x) { return (x.get_d() - x0) / span * size; };
    auto sy = [&](const Scalar& y) { return size - (y.get_d() - y0) / span * size; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" fill=\"white\"/>\n";
    std::size_t color = 0;
    for (const auto& [name, poly] : extras.regions) {
        std::string pts;
        for (const auto& p : poly) pts += (pts.empty() ? "" : " ") + num(sx(p[0])) + "," + num(sy(p[1]));
        const char* c = kPalette[color++ % (sizeof kPalette / sizeof *kPalette)];
        out += "<polygon points=\"" + pts + "\" fill=\"" + c + "\" fill-opacity=\"0.25\" stroke=\"" + c +
               "\" stroke-width=\"1\"><title>" + escape(name) + "</title></polygon>\n";
    }
    for (const auto& p : P.points)
        out += "<circle cx=\"" + num(sx(p[0])) + "\" cy=\"" + num(sy(p[1])) + "\" r=\"3\" fill=\"black\"/>\n";
    auto cross = [&](const Point& p, const char* colour) {
        double x = sx(p[0]), y = sy(p[1]);
        out += "<path d=\"M" + num(x - 6) + "," + num(y - 6) + " L" + num(x + 6) + "," + num(y + 6) + " M" + num(x - 6) +
               "," + num(y + 6) + " L" + num(x + 6) + "," + num(y - 6) + "\" stroke=\"" + colour +
               "\" stroke-width=\"2\"/>\n";
    };
    for (const auto& p : extras.crosses) cross(p, "black");
    if (net)
        for (const auto& p : net->points) cross(p, "#d62728");
    out += "</svg>\n";
    return out;
}

}  // namespace epsnet
