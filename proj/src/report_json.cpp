#include "jacobsthal/report_json.hpp"

namespace jacobsthal {

namespace {

nlohmann::json rendered_to_json(const Rendered& value) {
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    return matrix_to_json(std::get<RenderedMatrix>(value));
}

}  // namespace

nlohmann::json matrix_to_json(const RenderedMatrix& matrix) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : matrix) rows.push_back(nlohmann::json(row));
    return rows;
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json out;
    out["identity"] = report.identity;
    out["status"] = report.passed ? "pass" : "fail";
    out["checks"] = report.checks_performed;
    if (report.extension) out["extension"] = true;
    if (report.counterexample) {
        const Counterexample& c = *report.counterexample;
        nlohmann::json ce;
        ce["k"] = c.k;
        if (c.m) ce["m"] = *c.m;
        ce["n"] = c.n;
        ce["lhs"] = rendered_to_json(c.lhs);
        ce["rhs"] = rendered_to_json(c.rhs);
        out["counterexample"] = std::move(ce);
    }
    return out;
}

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(report_to_json(r));
    return out;
}

}  // namespace jacobsthal
