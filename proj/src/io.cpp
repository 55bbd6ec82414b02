#include "cramer_lgv/io.hpp"

#include "cramer_lgv/errors.hpp"

namespace cramer_lgv {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::ParseError, "malformed input: " + what);
}

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
    if (!doc.is_object()) malformed("expected a JSON object");
    const auto it = doc.find(key);
    if (it == doc.end()) malformed(std::string("missing \"") + key + "\"");
    return *it;
}

const nlohmann::json& require_array(const nlohmann::json& doc, const char* key) {
    const auto& value = require(doc, key);
    if (!value.is_array()) malformed(std::string("\"") + key + "\" must be an array");
    return value;
}

std::string require_label(const nlohmann::json& value) {
    if (!value.is_string()) malformed("vertex labels must be strings");
    return value.get<std::string>();
}

std::vector<VertexId> labels_from_json(const nlohmann::json& array) {
    std::vector<VertexId> ids;
    for (const auto& v : array) ids.emplace_back(require_label(v));
    return ids;
}

OrderedJson labels_to_json(std::span<const VertexId> ids) {
    OrderedJson out = OrderedJson::array();
    for (const auto& v : ids) out.push_back(v.label);
    return out;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
}

Rational rational_from_json(const nlohmann::json& value) {
    if (value.is_number_integer()) {
        // Round-trip through text so the full int64 / uint64 range is kept.
        return Rational::parse(value.dump());
    }
    if (value.is_string()) {
        return Rational::parse(value.get<std::string>());
    }
    if (value.is_number_float()) {
        malformed("floating-point number " + value.dump() + " (use an integer or a \"p/q\" string)");
    }
    malformed("expected an integer or a \"p/q\" string, got " + value.dump());
}

WeightedDigraph graph_from_json(const nlohmann::json& doc) {
    std::vector<VertexId> vertices = labels_from_json(require_array(doc, "vertices"));
    std::vector<Edge> edges;
    for (const auto& e : require_array(doc, "edges")) {
        edges.push_back({VertexId(require_label(require(e, "from"))), VertexId(require_label(require(e, "to"))),
                         rational_from_json(require(e, "weight"))});
    }
    return build_digraph(std::move(vertices), std::move(edges));
}

LinearSystem system_from_json(const nlohmann::json& doc) {
    const auto& a = require_array(doc, "A");
    if (a.empty()) malformed("\"A\" must have at least one row");
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a) {
        if (!row.is_array()) malformed("each row of \"A\" must be an array");
        auto& out = rows.emplace_back();
        for (const auto& v : row) out.push_back(rational_from_json(v));
    }
    std::vector<Rational> rhs;
    for (const auto& v : require_array(doc, "b")) rhs.push_back(rational_from_json(v));
    return make_system(Matrix::from_rows(rows), std::move(rhs));
}

LgvInput lgv_input_from_json(const nlohmann::json& doc) {
    return LgvInput{graph_from_json(doc), labels_from_json(require_array(doc, "sources")),
                    labels_from_json(require_array(doc, "sinks"))};
}

OrderedJson to_json(const Rational& r) { return r.to_string(); }

OrderedJson to_json(std::span<const Rational> values) {
    OrderedJson out = OrderedJson::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

OrderedJson to_json(const Matrix& m) {
    OrderedJson out = OrderedJson::array();
    for (std::size_t r = 0; r < m.size(); ++r) out.push_back(to_json(m.row(r)));
    return out;
}

OrderedJson to_json(const PathSystem& ps) {
    OrderedJson sigma = OrderedJson::array();
    for (std::size_t v : ps.sigma.images) sigma.push_back(v + 1);
    OrderedJson paths = OrderedJson::array();
    for (const auto& p : ps.paths) paths.push_back(labels_to_json(p.vertices));
    OrderedJson out;
    out["sigma"] = std::move(sigma);
    out["sign"] = ps.sign();
    out["paths"] = std::move(paths);
    out["weight"] = ps.weight.to_string();
    return out;
}

OrderedJson to_json(const LgvReport& report) {
    OrderedJson out;
    out["n"] = report.n;
    out["sources"] = labels_to_json(report.matrix.sources);
    out["sinks"] = labels_to_json(report.matrix.sinks);
    out["path_matrix"] = to_json(report.matrix.entries);
    out["det_path_matrix"] = to_json(report.det_path_matrix);
    out["all_systems_signed_sum"] = to_json(report.all_systems_signed_sum);
    out["vd_systems_signed_sum"] = to_json(report.vd_systems_signed_sum);
    out["total_systems"] = report.total_systems;
    out["vd_systems"] = report.vd_systems;
    out["verdict"] = report.pass ? "pass" : "fail";
    return out;
}

OrderedJson to_json(const Certificate& cert) {
    OrderedJson base = OrderedJson::array();
    for (const auto& ps : cert.base_systems) base.push_back(to_json(ps));
    OrderedJson extended = OrderedJson::array();
    for (const auto& ps : cert.extended_systems) extended.push_back(to_json(ps));
    OrderedJson pairing = OrderedJson::array();
    for (const auto& [b, e] : cert.pairing) pairing.push_back({b, e});

    OrderedJson out;
    out["index"] = cert.index + 1;
    out["solution"] = to_json(cert.solution);
    out["det_A"] = to_json(cert.det_A);
    out["det_Ai"] = to_json(cert.det_Ai);
    out["base_systems"] = std::move(base);
    out["extended_systems"] = std::move(extended);
    out["pairing"] = std::move(pairing);
    out["A"] = to_json(cert.coeff);
    out["b"] = to_json(cert.rhs);
    out["sources"] = labels_to_json(cert.sources);
    out["base_sinks"] = labels_to_json(cert.base_sinks);
    out["extended_sinks"] = labels_to_json(cert.extended_sinks);
    return out;
}

}  // namespace cramer_lgv
