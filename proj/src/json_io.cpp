#include "gamas/json_io.hpp"

#include "gamas/errors.hpp"

namespace gamas {

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    throw ParseError("expected a rational string, got " + j.dump());
}

Json config_to_json(const VectorConfiguration& cfg) {
    Json vectors = Json::array();
    for (const auto& v : cfg.vectors()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(rational_to_json(x));
        vectors.push_back(std::move(row));
    }
    return Json{{"dim", cfg.dim()}, {"vectors", std::move(vectors)}};
}

VectorConfiguration config_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vectors") || !j["vectors"].is_array()) {
        throw ParseError("configuration must be an object with a \"vectors\" array");
    }
    std::vector<ExactVector> vs;
    for (const auto& row : j["vectors"]) {
        if (!row.is_array()) throw ParseError("each vector must be an array");
        ExactVector v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        vs.push_back(std::move(v));
    }
    int d = 0;
    if (j.contains("dim")) {
        if (!j["dim"].is_number_integer() || j["dim"].get<int>() < 0) throw ParseError("\"dim\" must be a non-negative integer");
        d = j["dim"].get<int>();
    } else if (!vs.empty()) {
        d = static_cast<int>(vs.front().size());
    }
    try {
        return {d, std::move(vs)};
    } catch (const SizeMismatch& e) {
        throw ParseError(e.what());
    }
}

Json tensor_to_json(const SparseTensor& t) {
    Json entries = Json::array();
    for (const auto& [idx, v] : t.entries()) entries.push_back(Json{{"index", idx}, {"value", rational_to_json(v)}});
    return Json{{"n", t.degree()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

Json permutation_to_json(const Permutation& p) { return p.images(); }

Json algebra_to_json(const GroupAlgebraElement& x) {
    Json out = Json::array();
    for (const auto& [p, c] : x.terms()) out.push_back(Json{{"perm", permutation_to_json(p)}, {"coeff", rational_to_json(c)}});
    return out;
}

Json character_table_to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back(c.parts());
    Json rows = Json::object();
    for (std::size_t i = 0; i < t.shapes.size(); ++i) rows[t.shapes[i].to_string()] = t.rows[i];
    return Json{{"n", t.n}, {"classes", std::move(classes)}, {"class_sizes", t.class_sizes}, {"rows", std::move(rows)}};
}

Json rank_partition_to_json(const RankPartition& rp) {
    return Json{{"rho", rp.rho}, {"covered", rp.covered}};
}

Json certificate_to_json(const BlockCertificate& cert) {
    Json out = Json::array();
    for (const auto& b : cert.blocks) {
        Json block = Json::array();
        for (int i : b) block.push_back(i + 1);
        out.push_back(std::move(block));
    }
    return out;
}

ExactMatrix matrix_from_json(const Json& j) {
    const Json& rows = j.is_object() && j.contains("rows") ? j["rows"] : j;
    if (!rows.is_array()) throw ParseError("matrix must be an array of rows or {\"rows\": [...]}");
    std::vector<ExactVector> vs;
    for (const auto& row : rows) {
        if (!row.is_array()) throw ParseError("matrix rows must be arrays");
        ExactVector v;
        for (const auto& x : row) v.push_back(rational_from_json(x));
        vs.push_back(std::move(v));
    }
    try {
        return ExactMatrix::from_rows(vs);
    } catch (const SizeMismatch& e) {
        throw ParseError(e.what());
    }
}

Json trial_spec_to_json(const TrialSpec& s) {
    return Json{{"seed", s.seed},           {"n_max", s.n_max},         {"dims", s.dims},
                {"trials_per_cell", s.trials_per_cell}, {"entry_range", s.entry_range},
                {"p_duplicate", s.p_duplicate}, {"p_scale", s.p_scale}, {"p_zero", s.p_zero}};
}

Json violation_to_json(const Violation& v) {
    Json j{{"suite", v.suite}, {"n", v.n}, {"d", v.d}, {"trial_index", v.trial_index}, {"seed", v.seed}};
    j["shape"] = v.shape;
    j["config"] = v.config ? config_to_json(*v.config) : Json(nullptr);
    j["expected"] = v.expected;
    j["actual"] = v.actual;
    j["details"] = v.details;
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) violations.push_back(violation_to_json(v));
    Json checks = Json::object();
    for (const auto& [k, c] : r.checks) checks[k] = c;
    return Json{{"ok", r.ok()},
                {"cells_run", r.cells_run},
                {"trials_run", r.trials_run},
                {"checks", std::move(checks)},
                {"violation_count", r.violations.size()},
                {"violations", std::move(violations)}};
}

}  // namespace gamas
