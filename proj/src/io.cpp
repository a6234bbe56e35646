#include "sgp/io.hpp"

#include "sgp/errors.hpp"

namespace sgp::io {

namespace {

Rational parse_coordinate(const json& c) {
    if (c.is_number_integer()) {
        return Rational(Integer(c.dump()));
    }
    if (c.is_string()) {
        return parse_rational(c.get<std::string>());
    }
    if (c.is_number_float()) {
        throw ParseError("floating-point coordinate " + c.dump() + "; write it as a \"p/q\" string");
    }
    throw ParseError("coordinate must be an integer or a \"p/q\" string, got " + c.dump());
}

}  // namespace

PointSet parse_point_set(const json& doc) {
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("points")) {
        throw ParseError("point set document needs \"dim\" and \"points\"");
    }
    const json& dim = doc.at("dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
        throw ParseError("\"dim\" must be a positive integer");
    }
    const json& pts = doc.at("points");
    if (!pts.is_array()) {
        throw ParseError("\"points\" must be an array");
    }
    std::vector<Vector> points;
    for (const json& p : pts) {
        if (!p.is_array()) {
            throw ParseError("each point must be an array of coordinates");
        }
        Vector v;
        for (const json& c : p) {
            v.push_back(parse_coordinate(c));
        }
        points.push_back(std::move(v));
    }
    return PointSet(dim.get<std::size_t>(), std::move(points));
}

PointSet parse_point_set_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_point_set(doc);
}

json to_json(const Vector& v) {
    json out = json::array();
    for (const auto& x : v) {
        out.push_back(to_string(x));
    }
    return out;
}

json to_json(const PointSet& points) {
    json pts = json::array();
    for (const auto& p : points.points()) {
        pts.push_back(to_json(p));
    }
    return {{"dim", points.dim()}, {"points", pts}};
}

SubsetFamily parse_family(const json& doc, std::size_t n) {
    if (!doc.is_array() || doc.empty()) {
        throw ParseError("family must be a nonempty array of blocks");
    }
    std::vector<std::vector<std::size_t>> labels;
    for (const json& block : doc) {
        if (!block.is_array() || block.empty()) {
            throw ParseError("each block must be a nonempty array of labels");
        }
        std::vector<std::size_t> b;
        for (const json& label : block) {
            if (!label.is_number_integer() || label.get<long long>() < 1 ||
                label.get<unsigned long long>() > n) {
                throw ParseError("labels must be integers in 1.." + std::to_string(n));
            }
            b.push_back(label.get<std::size_t>());
        }
        labels.push_back(std::move(b));
    }
    return SubsetFamily::from_labels(labels);
}

json to_json(const SubsetFamily& family) {
    return family.labels();
}

json to_json(const Verdict& verdict) {
    switch (verdict.status) {
        case Verdict::Status::InSGP:
            return {{"status", "sgp"}};
        case Verdict::Status::NotGeneralPosition: {
            std::vector<std::size_t> labels;
            for (auto i : verdict.witness) {
                labels.push_back(i + 1);
            }
            return {{"status", "not_general_position"}, {"witness", labels}};
        }
        case Verdict::Status::Violation:
            break;
    }
    const Condition& c = *verdict.condition;
    json out = {{"status", "violation"},
                {"clause", std::string(to_string(c.clause))},
                {"family", to_json(c.family)}};
    switch (c.expected.kind) {
        case Expectation::Kind::Singleton: out["expected"] = "singleton"; break;
        case Expectation::Kind::Empty: out["expected"] = "empty"; break;
        case Expectation::Kind::Dim:
            out["expected"] = "dim";
            out["expected_dim"] = c.expected.dim;
            break;
    }
    out["actual_dim"] = verdict.actual_dim;
    return out;
}

json to_json(const ConditionCounts& counts) {
    json out = {{"A", counts.clause_a}, {"B", counts.clause_b}, {"C", counts.clause_c}, {"total", counts.reduced_total()}};
    if (counts.naive) {
        out["naive"] = *counts.naive;
    }
    return out;
}

}  // namespace sgp::io
