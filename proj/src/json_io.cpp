#include "cubefree/json_io.hpp"

#include <cmath>

namespace cubefree {

namespace {

Json json_or_null(const std::optional<BigInt>& value) {
    if (!value) return nullptr;
    return value->str();
}

}  // namespace

Json to_json(const Params& params) {
    return Json{{"n", params.n}, {"r", params.r}, {"mode", to_string(params.mode)}};
}

Json to_json(const Violation& violation) {
    Json witnesses = Json::array();
    for (const Vertex& v : violation.witnesses) witnesses.push_back(format_vertex(v));
    return Json{
        {"kind", violation.kind == Violation::Kind::edge ? "edge" : "triangle"},
        {"witnesses", std::move(witnesses)},
    };
}

Json to_json(const AlterationTrace& trace) {
    Json removed = Json::array();
    for (const Vertex& v : trace.removed) removed.push_back(format_vertex(v));
    return Json{
        {"sampled_count", trace.sampled_count},
        {"triangles_found", trace.triangles_found},
        {"removed", std::move(removed)},
        {"final_size", trace.final_size},
        {"probability", trace.probability},
        {"seed", trace.seed},
    };
}

Json to_json(const ClampedProbability& probability) {
    return Json{
        {"value", probability.value},
        {"raw", std::isfinite(probability.raw) ? Json(probability.raw) : Json(nullptr)},
        {"clamped", probability.clamped},
    };
}

Json to_json(const LevelProfile& profile) {
    Json levels = Json::array();
    for (std::size_t k = 0; k < profile.per_level.size(); ++k) {
        const LevelBound& lb = profile.per_level[k];
        levels.push_back(Json{{"k", k}, {"value", lb.value.str()}, {"rule", to_string(lb.rule)}});
    }
    return levels;
}

Json to_json(const BoundReport& report) {
    Json out = to_json(report.params);
    out["triangle_count"] = report.triangle_count.str();
    out["optimal_probability"] = to_json(report.optimal_probability);
    out["lower_probabilistic"] = report.lower_probabilistic;
    out["lower_asymptotic"] = report.lower_asymptotic;
    if (report.antipodal)
        out["antipodal"] =
            Json{{"p", report.antipodal->p}, {"size", report.antipodal->size.str()}};
    else
        out["antipodal"] = nullptr;
    out["fixed_bit"] = json_or_null(report.fixed_bit);
    out["upper_r2"] = json_or_null(report.upper_r2);
    out["upper_level_sum"] = json_or_null(report.upper_level_sum);
    out["upper_applicable"] = report.upper_applicable;
    out["notes"] = report.notes;
    return out;
}

Json to_json(const OracleResult& result) {
    return Json{
        {"best_size", result.best_size},
        {"optimal", result.optimal},
        {"nodes", result.nodes},
    };
}

Json to_json(const SandwichReport& report) {
    Json out = to_json(report.params);
    out["lower_probabilistic"] = report.lower_probabilistic;
    if (report.antipodal)
        out["antipodal"] =
            Json{{"p", *report.antipodal_prime}, {"size", report.antipodal->str()}};
    else
        out["antipodal"] = nullptr;
    out["fixed_bit"] = json_or_null(report.fixed_bit);
    out["alteration"] = report.alteration ? Json(*report.alteration) : Json(nullptr);
    out["oracle"] = report.oracle ? to_json(*report.oracle) : Json(nullptr);
    out["best_known"] = report.best_known.str();
    out["upper_r2"] = json_or_null(report.upper_r2);
    out["upper_level_sum"] = json_or_null(report.upper_level_sum);
    out["consistent"] = report.consistent;
    out["violations"] = report.violations;
    out["notes"] = report.notes;
    return out;
}

}  // namespace cubefree
