#include "epsnet/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace epsnet {

namespace {

class ExactSax {
public:
    Json root;

    bool null() { return put(Json(nullptr)); }
    bool boolean(bool b) { return put(Json(b)); }
    bool number_integer(Json::number_integer_t v) { return put(Json(std::to_string(v))); }
    bool number_unsigned(Json::number_unsigned_t v) { return put(Json(std::to_string(v))); }
    bool number_float(Json::number_float_t, const Json::string_t& raw) { return put(Json(raw)); }
    bool string(Json::string_t& s) { return put(Json(s)); }
    bool binary(Json::binary_t&) { return false; }
    bool start_object(std::size_t) { return open(Json::object()); }
    bool key(Json::string_t& k) {
        key_ = k;
        return true;
    }
    bool end_object() { return close(); }
    bool start_array(std::size_t) { return open(Json::array()); }
    bool end_array() { return close(); }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) {
        throw InvalidInput("malformed JSON at byte " + std::to_string(pos) + ": " + e.what());
    }

private:
    bool put(Json v) {
        if (stack_.empty()) {
            root = std::move(v);
        } else if (stack_.back()->is_array()) {
            stack_.back()->push_back(std::move(v));
        } else {
            (*stack_.back())[key_] = std::move(v);
        }
        return true;
    }
    bool open(Json v) {
        Json* slot;
        if (stack_.empty()) {
            root = std::move(v);
            slot = &root;
        } else if (stack_.back()->is_array()) {
            stack_.back()->push_back(std::move(v));
            slot = &stack_.back()->back();
        } else {
            slot = &((*stack_.back())[key_] = std::move(v));
        }
        stack_.push_back(slot);
        return true;
    }
    bool close() {
        stack_.pop_back();
        return true;
    }

    std::vector<Json*> stack_;
    std::string key_;
};

}  // namespace

Json parse_json_exact(const std::string& text) {
    ExactSax sax;
    Json::sax_parse(text, &sax);
    return std::move(sax.root);
}

PointSet parse_point_set(const std::string& text) {
    Json j = parse_json_exact(text);
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw InvalidInput("point set needs \"dim\" and \"points\"");
    if (!j["dim"].is_string()) throw InvalidInput("\"dim\" must be an integer");
    Scalar dimv = parse_scalar(j["dim"].get<std::string>());
    if (dimv.get_den() != 1 || dimv < 1 || dimv > 64) throw InvalidInput("\"dim\" must be an integer in [1, 64]");
    int dim = static_cast<int>(dimv.get_num().get_si());
    if (!j["points"].is_array()) throw InvalidInput("\"points\" must be an array");
    std::vector<Point> pts;
    for (const auto& row : j["points"]) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
            throw InvalidInput("point " + std::to_string(pts.size()) + " does not have " + std::to_string(dim) +
                               " coordinates");
        Point p;
        for (const auto& x : row) {
            if (!x.is_string()) throw InvalidInput("coordinates must be numbers or rational strings");
            p.push_back(parse_scalar(x.get<std::string>()));
        }
        pts.push_back(std::move(p));
    }
    bool gp = j.contains("general_position") && j["general_position"].is_boolean() && j["general_position"].get<bool>();
    PointSet P(dim, std::move(pts), gp);
    validate(P);
    return P;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PointSet read_point_set(const std::string& path) { return parse_point_set(read_file(path)); }

std::string point_set_json(const PointSet& P) {
    Json j;
    j["dim"] = P.dim;
    j["points"] = points_json(P.points);
    return dump(j);
}

void write_file(const std::string& path, const std::string& contents) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write " + path);
        out << contents;
        if (!out) throw InvalidInput("cannot write " + path);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InvalidInput("cannot move " + tmp + " to " + path);
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    for (unsigned i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return ss.str();
}

Json scalar_json(const Scalar& s) { return format_scalar(s); }

Json point_json(const Point& p) {
    Json a = Json::array();
    for (const auto& x : p) a.push_back(scalar_json(x));
    return a;
}

Json points_json(const std::vector<Point>& pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(point_json(p));
    return a;
}

Json range_json(const RangeWitness& r) {
    Json j;
    if (auto* b = std::get_if<BoxRange>(&r)) {
        j["type"] = "box";
        j["lo"] = point_json(b->lo);
        j["hi"] = point_json(b->hi);
    } else {
        const auto& h = std::get<SubsetHull>(r);
        j["type"] = "hull";
        j["indices"] = h.indices;
        j["points"] = points_json(h.points());
    }
    return j;
}

Json report_json(const VerificationReport& rep) {
    Json j;
    j["engine"] = rep.engine;
    j["passed"] = rep.passed();
    j["ranges_examined"] = rep.ranges_examined;
    Json levels = Json::array();
    for (const auto& l : rep.levels) {
        Json e;
        e["level"] = l.level;
        e["eps"] = scalar_json(l.eps);
        e["threshold"] = l.threshold;
        e["pass"] = l.pass;
        e["violations"] = l.violations;
        levels.push_back(e);
    }
    j["levels"] = levels;
    Json vs = Json::array();
    for (const auto& v : rep.violations) {
        Json e;
        e["level"] = v.level;
        e["levels"] = v.levels;
        e["points_inside"] = v.points_inside;
        e["net_inside"] = v.net_inside;
        e["range"] = range_json(v.range);
        vs.push_back(e);
    }
    j["violations"] = vs;
    j["total_violations"] = rep.total_violations;
    j["truncated"] = rep.truncated;
    Json cs = Json::array();
    for (const auto& c : rep.claims) {
        Json e;
        e["name"] = c.name;
        e["kind"] = c.kind;
        e["statement"] = c.statement;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        cs.push_back(e);
    }
    j["claims"] = cs;
    return j;
}

Json trace_json(const ConstructionTrace& t) {
    Json j;
    Json hs = Json::array();
    for (const auto& [name, h] : t.hyperplanes) {
        Json e;
        e["name"] = name;
        e["normal"] = point_json(h.normal);
        e["offset"] = scalar_json(h.offset);
        hs.push_back(e);
    }
    j["hyperplanes"] = hs;
    Json cs = Json::object();
    for (const auto& [name, v] : t.counts) cs[name] = v;
    j["counts"] = cs;
    Json ws = Json::object();
    for (const auto& [name, p] : t.witnesses) ws[name] = point_json(p);
    j["witnesses"] = ws;
    j["notes"] = t.notes;
    return j;
}

Json claims_json(const GadgetInstance& g) {
    Json j;
    j["gadget"] = g.name;
    Json params = Json::object();
    for (const auto& [k, v] : g.parameters) params[k] = v;
    j["parameters"] = params;
    Json ws = Json::array();
    for (const auto& [name, w] : g.witnesses) {
        Json e;
        e["name"] = name;
        if (auto* h = std::get_if<SubsetHull>(&w)) {
            e["type"] = "hull";
            e["indices"] = h->indices;
        } else {
            const auto& hp = std::get<HPolytope>(w);
            e["type"] = "halfspaces";
            Json hs = Json::array();
            for (const auto& h : hp.halfspaces) {
                Json x;
                x["normal"] = point_json(h.normal);
                x["offset"] = scalar_json(h.offset);
                x["closed"] = h.closed;
                hs.push_back(x);
            }
            e["halfspaces"] = hs;
        }
        ws.push_back(e);
    }
    j["witnesses"] = ws;
    Json cs = Json::array();
    for (const auto& c : g.claims) {
        Json e;
        e["name"] = c.name;
        e["kind"] = to_string(c.kind);
        e["statement"] = c.statement;
        e["operands"] = c.operands;
        if (c.halfspace) {
            e["halfspace"]["normal"] = point_json(c.halfspace->normal);
            e["halfspace"]["offset"] = scalar_json(c.halfspace->offset);
            e["halfspace"]["closed"] = c.halfspace->closed;
        }
        if (c.point) {
            e["point"] = point_json(*c.point);
            e["expect_inside"] = c.expect_inside;
        }
        if (c.kind == ClaimKind::Count) e["expected_count"] = c.expected_count;
        if (c.kind == ClaimKind::OracleThreshold) {
            e["threshold"] = c.threshold;
            e["samples"] = c.samples.size();
        }
        cs.push_back(e);
    }
    j["claims"] = cs;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace epsnet
