#include "santalo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace santalo {

namespace {

void format_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void dump_value(std::string& out, const Json& j, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    const std::string closing(static_cast<std::size_t>(indent) * depth, ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                out += Json(key).dump();
                out += ": ";
                dump_value(out, value, indent, depth + 1);
            }
            out += "\n" + closing + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            bool first = true;
            for (const auto& value : j) {
                if (!first) out += ",\n";
                first = false;
                out += pad;
                dump_value(out, value, indent, depth + 1);
            }
            out += "\n" + closing + "]";
            return;
        }
        case Json::value_t::number_float:
            format_double(out, j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

Vec to_vec(const Json& j) { return j.get<Vec>(); }

Json node_to_json(const YaoYaoNode& node) {
    Json j;
    if (node.is_leaf) {
        j["type"] = "leaf";
        return j;
    }
    j["type"] = "split";
    Json frame;
    frame["origin"] = node.frame.origin;
    frame["axes"] = node.frame.axes;
    j["frame"] = std::move(frame);
    j["offset"] = node.offset;
    j["direction"] = node.direction;
    j["plus"] = node_to_json(*node.plus);
    j["minus"] = node_to_json(*node.minus);
    return j;
}

std::unique_ptr<YaoYaoNode> node_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "leaf") return YaoYaoNode::leaf();
    if (type != "split") throw DimensionMismatch("unknown tree node type: " + type);
    AffineFrame frame;
    frame.origin = to_vec(j.at("frame").at("origin"));
    for (const auto& axis : j.at("frame").at("axes")) frame.axes.push_back(to_vec(axis));
    return YaoYaoNode::split(std::move(frame), j.at("offset").get<double>(),
                             to_vec(j.at("direction")), node_from_json(j.at("plus")),
                             node_from_json(j.at("minus")));
}

} // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    dump_value(out, j, indent, 0);
    out += "\n";
    return out;
}

Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file: " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error("invalid JSON in " + path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << dump_json(j);
}

Json cloud_to_json(const WeightedPointCloud& cloud) {
    Json j;
    j["dim"] = cloud.dim();
    j["points"] = cloud.points();
    j["weights"] = cloud.weights();
    return j;
}

WeightedPointCloud cloud_from_json(const Json& j) {
    try {
        const int dim = j.at("dim").get<int>();
        std::vector<Vec> points;
        for (const auto& p : j.at("points")) points.push_back(to_vec(p));
        std::vector<double> weights = j.at("weights").get<std::vector<double>>();
        WeightedPointCloud cloud(std::move(points), std::move(weights));
        if (cloud.dim() != dim) throw DimensionMismatch("cloud dim field does not match points");
        return cloud;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed cloud JSON: ") + e.what());
    }
}

Json field_to_json(const ScalarField& field) {
    Json j;
    Json box;
    box["lo"] = field.lo;
    box["hi"] = field.hi;
    j["box"] = std::move(box);
    j["shape"] = field.shape;
    j["values"] = field.values;
    return j;
}

ScalarField field_from_json(const Json& j) {
    try {
        ScalarField field;
        field.lo = to_vec(j.at("box").at("lo"));
        field.hi = to_vec(j.at("box").at("hi"));
        field.shape = j.at("shape").get<std::vector<int>>();
        field.values = j.at("values").get<std::vector<double>>();
        field.validate();
        return field;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed field JSON: ") + e.what());
    }
}

Json polytope_to_json(const ConvexPolytope& P) {
    Json j;
    j["vertices"] = P.vertices;
    return j;
}

ConvexPolytope polytope_from_json(const Json& j) {
    try {
        ConvexPolytope P;
        for (const auto& v : j.at("vertices")) P.vertices.push_back(to_vec(v));
        P.validate();
        return P;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed polytope JSON: ") + e.what());
    }
}

Json tree_to_json(const YaoYaoTree& tree) {
    Json j;
    j["center"] = tree.center;
    j["root"] = node_to_json(*tree.root);
    return j;
}

YaoYaoTree tree_from_json(const Json& j) {
    try {
        YaoYaoTree tree;
        tree.center = to_vec(j.at("center"));
        tree.root = node_from_json(j.at("root"));
        validate_tree(tree);
        return tree;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed tree JSON: ") + e.what());
    }
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["lhs"] = cert.lhs;
    j["rhs"] = cert.rhs;
    j["margin"] = cert.margin;
    j["passed"] = cert.passed;
    Json diags = Json::array();
    for (const auto& [label, value] : cert.diagnostics) {
        Json d;
        d["label"] = label;
        d["value"] = value;
        diags.push_back(std::move(d));
    }
    j["diagnostics"] = std::move(diags);
    return j;
}

Certificate certificate_from_json(const Json& j) {
    try {
        Certificate cert;
        cert.lhs = j.at("lhs").get<double>();
        cert.rhs = j.at("rhs").get<double>();
        cert.margin = j.at("margin").get<double>();
        cert.passed = j.at("passed").get<bool>();
        for (const auto& d : j.at("diagnostics"))
            cert.add(d.at("label").get<std::string>(), d.at("value").get<double>());
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed certificate JSON: ") + e.what());
    }
}

Json report_to_json(const EquipartitionReport& report) {
    Json j;
    j["tree"] = tree_to_json(report.tree);
    j["masses"] = report.masses;
    j["max_imbalance"] = report.max_imbalance;
    j["residual_norm"] = report.residual_norm;
    j["iterations"] = report.iterations;
    j["total_mass"] = report.total_mass;
    return j;
}

EquipartitionReport report_from_json(const Json& j) {
    try {
        EquipartitionReport report;
        report.tree = tree_from_json(j.at("tree"));
        report.masses = j.at("masses").get<std::vector<double>>();
        report.max_imbalance = j.at("max_imbalance").get<double>();
        report.residual_norm = j.at("residual_norm").get<double>();
        report.iterations = j.at("iterations").get<int>();
        report.total_mass = j.at("total_mass").get<double>();
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed report JSON: ") + e.what());
    }
}

Json body_certificate_to_json(const BodyCertificate& cert) {
    Json j;
    j["vol_K"] = cert.vol_K;
    j["vol_polar"] = cert.vol_polar;
    j["product"] = cert.product;
    j["bound"] = cert.bound;
    j["passed"] = cert.passed;
    j["santalo_point"] = cert.santalo_point;
    return j;
}

BodyCertificate body_certificate_from_json(const Json& j) {
    try {
        BodyCertificate cert;
        cert.vol_K = j.at("vol_K").get<double>();
        cert.vol_polar = j.at("vol_polar").get<double>();
        cert.product = j.at("product").get<double>();
        cert.bound = j.at("bound").get<double>();
        cert.passed = j.at("passed").get<bool>();
        cert.santalo_point = to_vec(j.at("santalo_point"));
        return cert;
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed body certificate JSON: ") + e.what());
    }
}

} // namespace santalo
