#ifndef CRAMER_LGV_IO_HPP
#define CRAMER_LGV_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "cramer_lgv/cramer.hpp"
#include "cramer_lgv/graph.hpp"
#include "cramer_lgv/lgv.hpp"
#include "cramer_lgv/linalg.hpp"

// JSON wire formats. Numbers are read from JSON integers or from "p" / "p/q"
// strings and are always written as strings; JSON floats are rejected.
// Indices that users see (certificate index, permutation images) are 1-based.

namespace cramer_lgv {

using OrderedJson = nlohmann::ordered_json;

Rational rational_from_json(const nlohmann::json& value);

/// {"vertices": [...], "edges": [{"from", "to", "weight"}, ...]}
WeightedDigraph graph_from_json(const nlohmann::json& doc);

/// {"A": [[...], ...], "b": [...]}
LinearSystem system_from_json(const nlohmann::json& doc);

struct LgvInput {
    WeightedDigraph graph;
    std::vector<VertexId> sources;
    std::vector<VertexId> sinks;
};

/// Graph document plus "sources" and "sinks" label arrays.
LgvInput lgv_input_from_json(const nlohmann::json& doc);

OrderedJson to_json(const Rational& r);
OrderedJson to_json(std::span<const Rational> values);
OrderedJson to_json(const Matrix& m);
OrderedJson to_json(const PathSystem& ps);
OrderedJson to_json(const LgvReport& report);
OrderedJson to_json(const Certificate& cert);

/// Parses a whole document; malformed text raises ParseError.
nlohmann::json parse_json_text(const std::string& text);

}  // namespace cramer_lgv

#endif  // CRAMER_LGV_IO_HPP
