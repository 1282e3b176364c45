#include "epsnet/constructions.hpp"
#include "epsnet/gadgets.hpp"
#include "epsnet/hull2d.hpp"
#include "epsnet/io.hpp"
#include "epsnet/parallel.hpp"
#include "epsnet/svg.hpp"
#include "epsnet/verification.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>

using namespace epsnet;

namespace {

enum Exit { kOk = 0, kInvalid = 2, kFailed = 3, kBudget = 4 };

struct Common {
    std::string report_path;
    bool timing = false;
    std::vector<std::string> argv;
};

struct Outcome {
    Json report;
    int code = kOk;
    std::string svg;
    std::string svg_path;
};

Json header(const Common& c, const std::string& command) {
    Json j;
    j["schema"] = "epsnet-report/1";
    j["command"]["name"] = command;
    j["command"]["args"] = c.argv;
    return j;
}

void finish(Json& j, int code) {
    static const char* names[] = {"ok", "", "invalid_input", "failed", "budget_exceeded"};
    j["status"] = names[code];
    j["exit_code"] = code;
}

Json input_json(const std::string& path, const std::string& text, const PointSet& P) {
    Json j;
    j["path"] = path;
    j["sha256"] = sha256_hex(text);
    j["n"] = P.size();
    j["dim"] = P.dim;
    return j;
}

Json profile_json(const EpsilonProfile& e) {
    Json a = Json::array();
    for (const auto& x : e.eps) a.push_back(scalar_json(x));
    return a;
}

RangeSpaceKind parse_kind(const std::string& s) {
    if (s == "convex") return RangeSpaceKind::ConvexSets;
    if (s == "boxes") return RangeSpaceKind::AxisParallelBoxes;
    throw InvalidInput("--ranges must be convex or boxes");
}

int verification_code(const VerificationReport& rep) { return rep.passed() ? kOk : kFailed; }

// ---------- construct ----------

struct ConstructArgs {
    std::string ranges, eps, input, svg;
    int size = 0;
    bool verify = false;
    std::uint64_t budget = 2'000'000;
};

Outcome run_construct(const ConstructArgs& a, const Common& c) {
    Outcome out;
    Json& j = out.report = header(c, "construct");
    auto kind = parse_kind(a.ranges);
    std::string text = read_file(a.input);
    PointSet P = parse_point_set(text);
    j["input"] = input_json(a.input, text, P);
    j["ranges"] = a.ranges;
    j["size"] = a.size;

    EpsilonProfile eps;
    if (!a.eps.empty()) eps = EpsilonProfile(parse_scalar_list(a.eps));
    if (a.size == 1 && eps.size() == 0) eps = EpsilonProfile({Scalar(1, 2)});
    if (eps.size() != static_cast<std::size_t>(a.size))
        throw InvalidInput("--eps must list " + std::to_string(a.size) + " values for a net of size " + std::to_string(a.size));
    j["profile"] = profile_json(eps);

    Construction built;
    try {
        if (kind == RangeSpaceKind::AxisParallelBoxes) {
            if (a.size == 1) {
                if (eps[0] < Scalar(1, 2)) throw InvalidInput("eps1 >= 1/2 fails: " + format_scalar(eps[0]) + " < 1/2");
                built.net = box_median_point(P);
                built.net.profile = eps;
            } else if (a.size == 2) {
                built = P.dim == 2 ? construct_box_pair_2d(P, eps) : construct_box_pair_highd(P, eps);
            } else if (a.size == 3) {
                built = construct_box_triple_2d(P, eps);
            } else {
                throw InvalidInput("--size must be 1, 2 or 3");
            }
        } else {
            if (a.size != 2) throw InvalidInput("convex ranges support --size 2 only");
            built = construct_convex_pair(P, eps, a.budget);
        }
    } catch (const ConstructionFailure& f) {
        j["construction"]["status"] = "failed";
        j["construction"]["message"] = f.what();
        j["construction"]["trace"] = trace_json(f.trace);
        out.code = kFailed;
        finish(j, out.code);
        return out;
    }
    j["construction"]["status"] = "ok";
    j["construction"]["trace"] = trace_json(built.trace);
    j["net"] = points_json(built.net.points);

    if (a.verify) {
        VerifyOptions opt;
        opt.convex_budget = a.budget;
        auto rep = verify_weighted_net(P, built.net, kind, opt);
        j["verification"] = report_json(rep);
        out.code = verification_code(rep);
    }
    if (!a.svg.empty()) {
        out.svg = render_svg(P, &built.net);
        out.svg_path = a.svg;
    }
    finish(j, out.code);
    return out;
}

// ---------- verify ----------

struct VerifyArgs {
    std::string input, net, eps, ranges, adversarial, engine = "auto";
    std::uint64_t budget = 2'000'000;
};

Outcome run_verify(const VerifyArgs& a, const Common& c) {
    Outcome out;
    Json& j = out.report = header(c, "verify");
    auto kind = parse_kind(a.ranges);
    std::string text = read_file(a.input);
    PointSet P = parse_point_set(text);
    std::string net_text = read_file(a.net);
    PointSet N = parse_point_set(net_text);
    j["input"] = input_json(a.input, text, P);
    j["net_input"] = input_json(a.net, net_text, N);
    j["ranges"] = a.ranges;
    WeightedNet net{N.points, EpsilonProfile(parse_scalar_list(a.eps))};
    j["profile"] = profile_json(net.profile);
    j["net"] = points_json(net.points);

    VerifyOptions opt;
    opt.convex_budget = a.budget;
    if (a.engine == "canonical") opt.box_engine = BoxEngine::Canonical;
    else if (a.engine == "maximal") opt.box_engine = BoxEngine::MaximalEmpty;
    else if (a.engine != "auto") throw InvalidInput("--engine must be auto, canonical or maximal");
    auto rep = verify_weighted_net(P, net, kind, opt);
    j["verification"] = report_json(rep);
    out.code = verification_code(rep);

    if (!a.adversarial.empty()) {
        auto comma = a.adversarial.find(',');
        if (comma == std::string::npos) throw InvalidInput("--adversarial expects trials,seed");
        std::uint64_t trials = std::stoull(a.adversarial.substr(0, comma));
        std::uint64_t seed = std::stoull(a.adversarial.substr(comma + 1));
        auto v = adversarial_search(P, net, kind, trials, seed);
        Json adv;
        adv["trials"] = trials;
        adv["seed"] = seed;
        adv["found"] = v.has_value();
        if (v) {
            adv["level"] = v->level;
            adv["points_inside"] = v->points_inside;
            adv["net_inside"] = v->net_inside;
            adv["range"] = range_json(v->range);
            out.code = kFailed;
        }
        j["adversarial"] = adv;
    }
    finish(j, out.code);
    return out;
}

// ---------- gadget ----------

struct GadgetArgs {
    std::string name, out, claims, svg, delta = "1/100";
    std::size_t k = 2, samples = 0;
    int dim = 3;
    std::uint64_t seed = 1;
    bool certify = false;
};

Outcome run_gadget(const GadgetArgs& a, const Common& c) {
    Outcome out;
    Json& j = out.report = header(c, "gadget");
    GadgetInstance g;
    if (a.name == "five-clusters") {
        g = gadget_five_clusters(a.k, parse_scalar(a.delta));
    } else if (a.name == "hexagon3d") {
        g = gadget_hexagon_3d(a.samples ? a.samples : 2000, a.seed);
    } else if (a.name == "simplex") {
        g = gadget_simplex(a.dim, a.samples ? a.samples : 200, a.seed);
    } else {
        throw InvalidInput("--name must be five-clusters, hexagon3d or simplex");
    }
    std::string points = point_set_json(*g.points);
    write_file(a.out, points);
    std::string claims_path = a.claims;
    if (claims_path.empty()) {
        claims_path = a.out;
        if (claims_path.size() > 5 && claims_path.ends_with(".json")) claims_path.resize(claims_path.size() - 5);
        claims_path += ".claims.json";
    }
    write_file(claims_path, dump(claims_json(g)));

    j["gadget"]["name"] = g.name;
    Json params = Json::object();
    for (const auto& [k, v] : g.parameters) params[k] = v;
    j["gadget"]["parameters"] = params;
    j["gadget"]["points_file"] = a.out;
    j["gadget"]["points_sha256"] = sha256_hex(points);
    j["gadget"]["claims_file"] = claims_path;
    j["gadget"]["n"] = g.points->size();
    j["gadget"]["dim"] = g.points->dim;
    if (a.certify) {
        auto rep = certify(g);
        j["verification"] = report_json(rep);
        out.code = verification_code(rep);
    }
    if (!a.svg.empty()) {
        SvgExtras extras;
        extras.regions = g.outlines;
        if (g.points->dim == 3)
            for (const auto& p : g.points->points)
                if (sgn(p[2]) != 0) extras.crosses.push_back(p);
        out.svg = render_svg(*g.points, nullptr, extras);
        out.svg_path = a.svg;
    }
    finish(j, out.code);
    return out;
}

// ---------- search ----------

struct SearchArgs {
    std::string ranges, input, candidates = "arrangement";
    int size = 1;
    std::uint64_t budget = 20'000;
};

std::vector<Point> arrangement_candidates(const PointSet& P) {
    if (P.dim != 2) throw InvalidInput("arrangement candidates need a 2D point set; use grid:R");
    std::set<Point> out(P.points.begin(), P.points.end());
    const std::size_t n = P.size();
    struct Line {
        Scalar a, b, c;  // a x + b y = c
    };
    std::vector<Line> lines;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k) {
            const auto &p = P[i], &q = P[k];
            if (p == q) continue;
            Scalar a = q[1] - p[1], b = p[0] - q[0];
            lines.push_back({a, b, a * p[0] + b * p[1]});
        }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t k = i + 1; k < lines.size(); ++k) {
            const auto &l = lines[i], &m = lines[k];
            Scalar det = l.a * m.b - l.b * m.a;
            if (sgn(det) == 0) continue;
            out.insert(Point{(l.c * m.b - l.b * m.c) / det, (l.a * m.c - l.c * m.a) / det});
        }
    return {out.begin(), out.end()};
}

std::vector<Point> grid_candidates(const PointSet& P, long R) {
    if (R < 1) throw InvalidInput("grid:R needs R >= 1");
    auto bb = bounding_box(P.points);
    std::vector<Point> out;
    std::vector<long> idx(static_cast<std::size_t>(P.dim), 0);
    while (true) {
        Point p;
        for (int a = 0; a < P.dim; ++a) {
            auto A = static_cast<std::size_t>(a);
            p.push_back(bb.lo[A] + (bb.hi[A] - bb.lo[A]) * frac(idx[A], R));
        }
        out.push_back(std::move(p));
        int a = P.dim - 1;
        while (a >= 0 && idx[static_cast<std::size_t>(a)] == R) idx[static_cast<std::size_t>(a--)] = 0;
        if (a < 0) break;
        ++idx[static_cast<std::size_t>(a)];
    }
    return out;
}

// Largest number of points in a box avoiding every point of `avoid`.
std::size_t box_max_avoiding(const PointSet& P, const std::vector<Point>& avoid) {
    // a box misses q iff one open side x_j < q_j or x_j > q_j holds it
    const int d = P.dim;
    std::size_t best = 0;
    std::vector<int> choice(avoid.size(), 0);
    while (true) {
        std::size_t m = 0;
        for (const auto& p : P.points) {
            bool ok = true;
            for (std::size_t i = 0; i < avoid.size() && ok; ++i) {
                int axis = choice[i] / 2;
                int s = sgn(p[static_cast<std::size_t>(axis)] - avoid[i][static_cast<std::size_t>(axis)]);
                ok = choice[i] % 2 ? s > 0 : s < 0;
            }
            if (ok) ++m;
        }
        best = std::max(best, m);
        std::size_t i = 0;
        while (i < choice.size() && choice[i] == 2 * d - 1) choice[i++] = 0;
        if (i == choice.size()) break;
        ++choice[i];
    }
    return best;
}

Outcome run_search(const SearchArgs& a, const Common& c) {
    Outcome out;
    Json& j = out.report = header(c, "search");
    auto kind = parse_kind(a.ranges);
    std::string text = read_file(a.input);
    PointSet P = parse_point_set(text);
    j["input"] = input_json(a.input, text, P);
    j["ranges"] = a.ranges;
    j["size"] = a.size;
    j["empirical"] = true;
    if (a.size != 1 && a.size != 2) throw InvalidInput("--size must be 1 or 2");
    if (P.size() > 64) throw InvalidInput("search is limited to n <= 64");
    if (kind == RangeSpaceKind::ConvexSets && P.dim > 3) throw InvalidInput("convex search supports d <= 3");

    std::vector<Point> cand;
    if (a.candidates == "arrangement") {
        cand = arrangement_candidates(P);
    } else if (a.candidates.starts_with("grid:")) {
        cand = grid_candidates(P, std::stol(a.candidates.substr(5)));
    } else {
        throw InvalidInput("--candidates must be arrangement or grid:R");
    }
    j["candidates"]["family"] = a.candidates;
    j["candidates"]["count"] = cand.size();
    const std::uint64_t m = cand.size();
    const std::uint64_t work = a.size == 1 ? m : m * (m + 1) / 2;
    if (work > a.budget)
        throw BudgetExceeded("search needs " + std::to_string(work) + " candidate evaluations, budget is " +
                             std::to_string(a.budget) + "; pass --budget " + std::to_string(work) +
                             " or use fewer candidates");

    auto avoid = [&](const std::vector<Point>& q) {
        return kind == RangeSpaceKind::AxisParallelBoxes ? box_max_avoiding(P, q) : max_subset_avoiding(P, q);
    };
    std::vector<std::size_t> single(cand.size());
    parallel_for(cand.size(), [&](std::size_t i) { single[i] = avoid({cand[i]}); });

    const auto n = static_cast<long>(P.size());
    Json best;
    if (a.size == 1) {
        std::size_t bi = 0;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (single[i] < single[bi]) bi = i;
        best["net"] = points_json({cand[bi]});
        best["profile"] = Json::array({scalar_json(frac(static_cast<long>(single[bi]), n))});
    } else {
        // per first index, the best (eps1, eps2) over partners
        std::vector<std::pair<std::size_t, std::size_t>> row_best(cand.size());
        std::vector<std::size_t> row_partner(cand.size());
        parallel_for(cand.size(), [&](std::size_t i) {
            std::pair<std::size_t, std::size_t> b{SIZE_MAX, SIZE_MAX};
            for (std::size_t k = i; k < cand.size(); ++k) {
                std::pair<std::size_t, std::size_t> v{avoid({cand[i], cand[k]}), std::max(single[i], single[k])};
                if (v < b) {
                    b = v;
                    row_partner[i] = k;
                }
            }
            row_best[i] = b;
        });
        std::size_t bi = 0;
        for (std::size_t i = 1; i < cand.size(); ++i)
            if (row_best[i] < row_best[bi]) bi = i;
        best["net"] = points_json({cand[bi], cand[row_partner[bi]]});
        best["profile"] = Json::array({scalar_json(frac(static_cast<long>(row_best[bi].first), n)),
                                       scalar_json(frac(static_cast<long>(row_best[bi].second), n))});
    }
    best["note"] = "smallest profile over the candidate family only; not a lower bound";
    j["best"] = best;

    Json refs = Json::array();
    auto ref = [&](const std::string& what, const Scalar& v) {
        Json r;
        r["bound"] = what;
        r["value"] = scalar_json(v);
        refs.push_back(r);
    };
    const int d = P.dim;
    if (kind == RangeSpaceKind::AxisParallelBoxes) {
        if (a.size == 1) ref("size-1 upper bound for boxes", Scalar(1, 2));
        else ref("size-2 upper bound for boxes in the plane (eps1, eps2)", Scalar(3, 7));
    } else {
        if (a.size == 1) ref("size-1 upper bound for convex sets, d/(d+1)", frac(d, d + 1));
        else {
            ref("size-2 worst-case lower bound for eps1 over all point sets, d/(d+2)", frac(d, d + 2));
            if (d == 2) ref("size-2 worst-case lower bound for eps1 over planar point sets", Scalar(4, 7));
            if (d == 3) ref("size-2 worst-case lower bound for eps1 over point sets in space", Scalar(5, 8));
        }
    }
    j["reference_bounds"] = refs;
    finish(j, out.code);
    return out;
}

void emit(const Outcome& o, const Common& c) {
    Json j = o.report;
    std::string text = dump(j);
    if (c.report_path.empty()) std::cout << text;
    else write_file(c.report_path, text);
    if (!o.svg_path.empty()) write_file(o.svg_path, o.svg);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"epsnet: weighted epsilon-nets for convex sets and boxes"};
    app.require_subcommand(1);
    Common common;
    for (int i = 2; i < argc; ++i) common.argv.emplace_back(argv[i]);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--report", common.report_path, "write the JSON report here instead of stdout");
        sub->add_flag("--timing", common.timing, "include wall-clock timing in the report");
    };

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "build a weighted net");
    construct->add_option("--ranges", ca.ranges)->required()->check(CLI::IsMember({"convex", "boxes"}));
    construct->add_option("--size", ca.size)->required()->check(CLI::IsMember({1, 2, 3}));
    construct->add_option("--eps", ca.eps, "comma separated rationals");
    construct->add_option("--input", ca.input)->required();
    construct->add_option("--svg", ca.svg);
    construct->add_flag("--verify", ca.verify);
    construct->add_option("--budget", ca.budget, "subset hull budget for convex ranges");
    add_common(construct);

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "check a weighted net exactly");
    verify->add_option("--input", va.input)->required();
    verify->add_option("--net", va.net)->required();
    verify->add_option("--eps", va.eps)->required();
    verify->add_option("--ranges", va.ranges)->required()->check(CLI::IsMember({"convex", "boxes"}));
    verify->add_option("--budget", va.budget, "subset hull budget for convex ranges");
    verify->add_option("--adversarial", va.adversarial, "trials,seed");
    verify->add_option("--engine", va.engine, "box engine: auto, canonical or maximal");
    add_common(verify);

    GadgetArgs ga;
    auto* gadget = app.add_subcommand("gadget", "generate a lower-bound point set");
    gadget->add_option("--name", ga.name)->required()->check(CLI::IsMember({"five-clusters", "hexagon3d", "simplex"}));
    gadget->add_option("--k", ga.k);
    gadget->add_option("--dim", ga.dim);
    gadget->add_option("--delta", ga.delta);
    gadget->add_option("--samples", ga.samples);
    gadget->add_option("--seed", ga.seed);
    gadget->add_option("--out", ga.out)->required();
    gadget->add_option("--claims", ga.claims);
    gadget->add_option("--svg", ga.svg);
    gadget->add_flag("--certify", ga.certify);
    add_common(gadget);

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "empirical search over candidate nets");
    search->add_option("--ranges", sa.ranges)->required()->check(CLI::IsMember({"convex", "boxes"}));
    search->add_option("--size", sa.size)->required()->check(CLI::IsMember({1, 2}));
    search->add_option("--input", sa.input)->required();
    search->add_option("--candidates", sa.candidates);
    search->add_option("--budget", sa.budget, "candidate evaluations");
    add_common(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInvalid;
    }

    const std::string name = app.get_subcommands().front()->get_name();
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (name == "construct") o = run_construct(ca, common);
        else if (name == "verify") o = run_verify(va, common);
        else if (name == "gadget") o = run_gadget(ga, common);
        else o = run_search(sa, common);
    } catch (const InvalidInput& e) {
        std::cerr << "epsnet: " << e.what() << "\n";
        o.report = header(common, name);
        o.report["message"] = e.what();
        o.code = kInvalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "epsnet: " << e.what() << "\n";
        o.report = header(common, name);
        o.report["message"] = e.what();
        o.code = kBudget;
    }
    o.report.erase("status");
    o.report.erase("exit_code");
    finish(o.report, o.code);
    if (common.timing)
        o.report["timing"]["seconds"] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    try {
        emit(o, common);
    } catch (const InvalidInput& e) {
        std::cerr << "epsnet: " << e.what() << "\n";
        return kInvalid;
    }
    return o.code;
}
