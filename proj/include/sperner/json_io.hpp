#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sperner/fixed_point.hpp"
#include "sperner/kkm_cover.hpp"

// Canonical JSON format shared by the library and the CLI.
//
// Instance documents look like
//   {"n": 3,
//    "vertices": [{"id": 0, "coords": ["1/1","0/1","0/1"], "label": 1}, ...],
//    "cells": [[0,3,6], ...]}
// with ids dense from 0 in table order, rationals as "p/q" in lowest terms,
// cell vertex lists ascending, and cells sorted lexicographically. The
// "label" field is optional but must be present on all vertices or none.
// Serialization of a parsed canonical document is byte-identical to it.

namespace sperner {

using Json = nlohmann::ordered_json;

struct InstanceDocument {
    Subdivision subdivision;
    std::optional<Labeling> labeling;
};

namespace detail {

inline Json point_to_json(const BPoint& p) {
    Json coords = Json::array();
    for (std::size_t k = 0; k < p.dim(); ++k) coords.push_back(to_string(p[k]));
    return coords;
}

inline Json cell_to_json(const Cell& cell) {
    Json ids = Json::array();
    for (VertexId v : cell.vertices()) ids.push_back(v);
    return ids;
}

[[noreturn]] inline void bad_document(const std::string& why) {
    throw std::invalid_argument("invalid instance document: " + why);
}

}  // namespace detail

inline Json instance_to_json_value(const Subdivision& sub, const Labeling* labeling = nullptr) {
    if (labeling && labeling->size() != sub.vertex_count())
        throw std::invalid_argument("instance_to_json: labeling size mismatch");
    Json doc;
    doc["n"] = sub.n();
    Json vertices = Json::array();
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
        Json vertex;
        vertex["id"] = v;
        vertex["coords"] = detail::point_to_json(sub.point(v));
        if (labeling) vertex["label"] = labeling->labels[v];
        vertices.push_back(std::move(vertex));
    }
    doc["vertices"] = std::move(vertices);
    Json cells = Json::array();
    for (const Cell& cell : sub.cells()) cells.push_back(detail::cell_to_json(cell));
    doc["cells"] = std::move(cells);
    return doc;
}

inline std::string instance_to_json(const Subdivision& sub, const Labeling* labeling = nullptr) {
    return instance_to_json_value(sub, labeling).dump() + "\n";
}

inline std::string instance_to_json(const InstanceDocument& doc) {
    return instance_to_json(doc.subdivision,
                            doc.labeling ? &doc.labeling.value() : nullptr);
}

inline InstanceDocument parse_instance(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        detail::bad_document(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) detail::bad_document("top level is not an object");
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "vertices" && key != "cells")
            detail::bad_document("unknown key '" + key + "'");
    if (!doc.contains("n") || !doc["n"].is_number_unsigned())
        detail::bad_document("'n' must be a nonnegative integer");
    if (!doc.contains("vertices") || !doc["vertices"].is_array())
        detail::bad_document("'vertices' must be an array");
    if (!doc.contains("cells") || !doc["cells"].is_array())
        detail::bad_document("'cells' must be an array");

    const std::size_t n = doc["n"].get<std::size_t>();
    std::vector<BPoint> vertices;
    std::vector<int> labels;
    std::size_t labeled = 0;
    for (std::size_t idx = 0; idx < doc["vertices"].size(); ++idx) {
        const Json& vertex = doc["vertices"][idx];
        if (!vertex.is_object()) detail::bad_document("vertex entry is not an object");
        for (const auto& [key, value] : vertex.items())
            if (key != "id" && key != "coords" && key != "label")
                detail::bad_document("unknown vertex key '" + key + "'");
        if (!vertex.contains("id") || !vertex["id"].is_number_unsigned() ||
            vertex["id"].get<std::size_t>() != idx)
            detail::bad_document("vertex ids must be dense from 0 in order");
        if (!vertex.contains("coords") || !vertex["coords"].is_array() ||
            vertex["coords"].size() != n)
            detail::bad_document("vertex " + std::to_string(idx) + " needs " +
                                 std::to_string(n) + " coords");
        std::vector<Rational> coords;
        coords.reserve(n);
        for (const Json& c : vertex["coords"]) {
            if (!c.is_string()) detail::bad_document("coordinates must be \"p/q\" strings");
            coords.push_back(parse_rational(c.get<std::string>()));
        }
        try {
            vertices.push_back(BPoint(std::move(coords)));
        } catch (const std::invalid_argument& e) {
            detail::bad_document("vertex " + std::to_string(idx) + ": " + e.what());
        }
        if (vertex.contains("label")) {
            if (!vertex["label"].is_number_integer())
                detail::bad_document("labels must be integers");
            labels.push_back(vertex["label"].get<int>());
            ++labeled;
        } else {
            labels.push_back(0);
        }
    }
    if (labeled != 0 && labeled != vertices.size())
        detail::bad_document("labels must be present on all vertices or none");

    std::vector<Cell> cells;
    for (const Json& entry : doc["cells"]) {
        if (!entry.is_array()) detail::bad_document("cell entry is not an array");
        std::vector<VertexId> ids;
        ids.reserve(entry.size());
        for (const Json& id : entry) {
            if (!id.is_number_unsigned()) detail::bad_document("cell ids must be nonnegative");
            ids.push_back(id.get<std::size_t>());
        }
        try {
            cells.push_back(Cell(std::move(ids)));
        } catch (const std::invalid_argument& e) {
            detail::bad_document(std::string("cell: ") + e.what());
        }
    }

    try {
        Subdivision sub(n, std::move(vertices), std::move(cells));
        std::optional<Labeling> labeling;
        if (labeled != 0) labeling = Labeling{std::move(labels)};
        return {std::move(sub), std::move(labeling)};
    } catch (const std::invalid_argument& e) {
        detail::bad_document(e.what());
    }
}

inline Json report_to_json_value(const ValidationReport& report) {
    Json doc;
    doc["mode"] = to_string(report.mode);
    doc["passed"] = report.passed;
    Json violations = Json::array();
    for (const Violation& v : report.violations) {
        Json item;
        item["kind"] = v.kind;
        item["ids"] = v.ids;
        item["detail"] = v.detail;
        violations.push_back(std::move(item));
    }
    doc["violations"] = std::move(violations);
    return doc;
}

inline std::string report_to_json(const ValidationReport& report) {
    return report_to_json_value(report).dump() + "\n";
}

inline std::string clreport_to_json(const CLReport& report) {
    Json doc;
    doc["count"] = report.count();
    Json cells = Json::array();
    for (const Cell& cell : report.cl_cells) cells.push_back(detail::cell_to_json(cell));
    doc["cells"] = std::move(cells);
    return doc.dump() + "\n";
}

inline std::string cover_to_json(const KKMCover& cover) {
    Json doc;
    doc["threshold"] = to_string(cover.threshold);
    Json pieces = Json::object();
    for (std::size_t i = 0; i < cover.pieces.size(); ++i) {
        Json list = Json::array();
        for (const CoverPiece& piece : cover.pieces[i]) {
            Json entry;
            entry["cell"] = detail::cell_to_json(piece.cell);
            entry["positions"] = piece.positions;
            list.push_back(std::move(entry));
        }
        pieces[std::to_string(i + 1)] = std::move(list);
    }
    doc["pieces"] = std::move(pieces);
    return doc.dump() + "\n";
}

inline Json witness_to_json_value(const Witness& witness) {
    Json doc;
    doc["label"] = witness.label;
    doc["cell"] = detail::cell_to_json(witness.cell);
    doc["vertex"] = witness.vertex;
    doc["weight"] = to_string(witness.weight);
    Json coords = Json::array();
    for (std::size_t p = 0; p < witness.coords.size(); ++p)
        coords.push_back(to_string(witness.coords[p]));
    doc["coords"] = std::move(coords);
    return doc;
}

inline std::string witness_to_json(const Witness& witness) {
    return witness_to_json_value(witness).dump() + "\n";
}

inline std::string intersection_to_json(const KKMIntersection& result) {
    Json doc;
    doc["point"] = detail::point_to_json(result.point);
    Json witnesses = Json::array();
    for (const Witness& w : result.witnesses) witnesses.push_back(witness_to_json_value(w));
    doc["witnesses"] = std::move(witnesses);
    return doc.dump() + "\n";
}

inline std::string naive_report_to_json(const NaiveCoverReport& report) {
    Json doc;
    Json flagged = Json::array();
    for (const NaiveFlag& flag : report.flagged) {
        Json item;
        item["vertex"] = flag.vertex;
        item["witness_cells"] = flag.witness_cells;
        flagged.push_back(std::move(item));
    }
    doc["flagged"] = std::move(flagged);
    return doc.dump() + "\n";
}

inline std::string fp_step_to_json(const FPStep& step) {
    Json doc;
    doc["m"] = step.resolution;
    doc["x"] = detail::point_to_json(step.point);
    doc["residual"] = to_string(step.residual);
    return doc.dump() + "\n";
}

}  // namespace sperner
