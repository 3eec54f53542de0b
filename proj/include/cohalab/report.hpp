#pragma once

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "cohalab/cross_check.hpp"
#include "cohalab/dt.hpp"
#include "cohalab/module_dims.hpp"
#include "cohalab/shuffle.hpp"
#include "cohalab/spans.hpp"

namespace cohalab {

using nlohmann::json;

inline json quiver_to_json(const Quiver& q) {
    return json{{"vertices", q.vertex_count}, {"arrows", q.arrows}};
}

/// Parses {"vertices": r, "arrows": [[...]]}; throws std::invalid_argument
/// on malformed input or an asymmetric matrix.
inline Quiver quiver_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("quiver: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw std::invalid_argument("quiver: expected {\"vertices\": r, \"arrows\": [[...]]}");
    Quiver q;
    try {
        q.vertex_count = j.at("vertices").get<int>();
        q.arrows = j.at("arrows").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("quiver: malformed JSON: ") + e.what());
    }
    QuiverValidation v = q.validate();
    if (!v.ok) throw std::invalid_argument(v.message);
    return q;
}

inline json dimvector_to_json(const DimVector& d) { return json(d.entries); }

inline json qlaurent_to_json(const QLaurent& p, bool as_q = false) {
    json terms = json::object();
    for (const auto& [e, c] : p.coeffs()) terms[std::to_string(e)] = to_string(c);
    return json{{"rendered", p.render(as_q)}, {"terms", terms}};
}

inline json series_to_json(const GradedSeries& s, bool as_q = false) {
    json rows = json::array();
    for (const auto& [d, c] : s.terms())
        rows.push_back(json{{"d", dimvector_to_json(d)}, {"coeff", qlaurent_to_json(c, as_q)}});
    return rows;
}

inline json span_to_json(const DimVector& d, const SpanResult& r, bool framed) {
    json dims = json::object();
    for (const auto& [tw, dim] : r.dims) dims[std::to_string(tw)] = dim;
    json out{{"d", dimvector_to_json(d)},
             {"dims", dims},
             {"total", span_total(r)},
             {"min_twice_weight", r.min_twice_weight},
             {"window", r.window}};
    if (framed) out["saturated"] = r.saturated;
    return out;
}

inline json dt_to_json(const Quiver& q, const DtTable& t, bool as_q = false) {
    json rows = json::array();
    for (const auto& [d, omega] : t.invariants)
        rows.push_back(json{{"d", dimvector_to_json(d)},
                            {"omega", qlaurent_to_json(omega, as_q)},
                            {"certified", t.certified.at(d)}});
    return json{{"quiver", quiver_to_json(q)}, {"dmax", t.dmax}, {"window", t.window},
                {"invariants", rows}};
}

inline json module_dims_to_json(const ModuleDims& m, const DimVector& d) {
    json dims = json::object();
    for (const auto& [key, dim] : m.dims)
        if (key.first == d) dims[std::to_string(key.second)] = dim;
    return json{{"d", dimvector_to_json(d)},
                {"w", dimvector_to_json(m.w)},
                {"dims", dims},
                {"total", m.total(d)}};
}

inline json cross_to_json(const CrossReport& r) {
    json cells = json::object();
    for (const auto& [k, cell] : r.cells)
        cells[std::to_string(k)] = json{{"fock", cell.dim_fock},
                                        {"quotient", cell.dim_quotient},
                                        {"character", cell.dim_character},
                                        {"status", cell_status_name(cell.status)}};
    json out{{"w", dimvector_to_json(r.w)},       {"d", dimvector_to_json(r.d)},
             {"saturated", r.saturated},          {"all_agree", r.all_agree},
             {"cells", cells},                    {"q_polynomial", r.q_polynomial}};
    if (r.note) out["note"] = *r.note;
    return out;
}

} // namespace cohalab
