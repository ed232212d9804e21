#include "quatinterp/json_io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace quatinterp {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError("malformed JSON input");
    return doc;
}

Quaternion quat_from(const json& node) {
    if (!node.is_array() || node.size() != 4) {
        throw ParseError("a quaternion is a 4-element array [t,x,y,z]");
    }
    for (const auto& v : node) {
        if (!v.is_number()) throw ParseError("quaternion coordinates must be numbers");
    }
    return {node[0].get<double>(), node[1].get<double>(), node[2].get<double>(),
            node[3].get<double>()};
}

FormalPoly formal_from(const json& doc) {
    if (doc.value("type", "") != "formal" || !doc.contains("coeffs") ||
        !doc["coeffs"].is_array()) {
        throw ParseError("expected {\"type\":\"formal\",\"coeffs\":[...]}");
    }
    std::vector<Quaternion> coeffs;
    for (const auto& c : doc["coeffs"]) coeffs.push_back(quat_from(c));
    return FormalPoly(std::move(coeffs));
}

TxyzPoly txyz_from(const json& doc) {
    if (doc.value("type", "") != "txyz" || !doc.contains("terms") ||
        !doc["terms"].is_array()) {
        throw ParseError("expected {\"type\":\"txyz\",\"terms\":[...]}");
    }
    TxyzPoly p;
    for (const auto& term : doc["terms"]) {
        if (!term.contains("exp") || !term.contains("coeff") || !term["exp"].is_array() ||
            term["exp"].size() != 4) {
            throw ParseError("each term needs \"exp\":[a,b,c,d] and \"coeff\":[t,x,y,z]");
        }
        Exponent e;
        for (int v = 0; v < 4; ++v) {
            if (!term["exp"][v].is_number_integer() || term["exp"][v].get<int>() < 0) {
                throw ParseError("exponents must be nonnegative integers");
            }
            e[v] = term["exp"][v].get<int>();
        }
        p.add_term(e, quat_from(term["coeff"]));
    }
    return p;
}

} // namespace

std::string emit_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string emit(const Quaternion& q) {
    std::ostringstream os;
    os << '[' << emit_double(q.t) << ',' << emit_double(q.x) << ',' << emit_double(q.y)
       << ',' << emit_double(q.z) << ']';
    return os.str();
}

std::string emit(const FormalPoly& f) {
    std::ostringstream os;
    os << "{\"type\":\"formal\",\"coeffs\":[";
    for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
        if (j) os << ',';
        os << emit(f.coeffs()[j]);
    }
    os << "]}";
    return os.str();
}

std::string emit(const TxyzPoly& p) {
    std::ostringstream os;
    os << "{\"type\":\"txyz\",\"terms\":[";
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) os << ',';
        first = false;
        os << "{\"exp\":[" << e[0] << ',' << e[1] << ',' << e[2] << ',' << e[3]
           << "],\"coeff\":" << emit(c) << '}';
    }
    os << "]}";
    return os.str();
}

std::string emit_points(const std::vector<Quaternion>& pts) {
    std::ostringstream os;
    os << '[';
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j) os << ',';
        os << emit(pts[j]);
    }
    os << ']';
    return os.str();
}

std::string emit(const LagrangeBasis& basis) {
    std::ostringstream os;
    os << "{\"type\":\"lagrange-basis\",\"choice\":" << static_cast<int>(basis.choice)
       << ",\"factor_order\":\"ascending\",\"points\":" << emit_points(basis.points)
       << ",\"polys\":[";
    for (std::size_t j = 0; j < basis.polys.size(); ++j) {
        if (j) os << ',';
        os << emit(basis.polys[j]);
    }
    os << "]}";
    return os.str();
}

Quaternion parse_quaternion(const std::string& text) {
    return quat_from(parse_json(text));
}

std::vector<Quaternion> parse_points(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_array()) throw ParseError("points must be an array of quaternions");
    std::vector<Quaternion> pts;
    for (const auto& node : doc) pts.push_back(quat_from(node));
    return pts;
}

FormalPoly parse_formal(const std::string& text) {
    return formal_from(parse_json(text));
}

TxyzPoly parse_txyz(const std::string& text) {
    return txyz_from(parse_json(text));
}

ParsedPoly parse_poly(const std::string& text) {
    const json doc = parse_json(text);
    if (!doc.is_object() || !doc.contains("type")) {
        throw ParseError("polynomial documents carry a \"type\" field");
    }
    ParsedPoly out;
    const std::string type = doc["type"].get<std::string>();
    if (type == "formal") {
        out.is_formal = true;
        out.formal = formal_from(doc);
    } else if (type == "txyz") {
        out.txyz = txyz_from(doc);
    } else {
        throw ParseError("unknown polynomial type: " + type);
    }
    return out;
}

} // namespace quatinterp
