#include "treetp/report_json.hpp"

namespace treetp {

namespace {

Json signs_as_rows(const std::vector<int>& flat, int n) {
    Json rows = Json::array();
    for (int i = 0; i < n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < n; ++j)
            row.push_back(flat[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

Json class_summary(const SignPatternReport::ClassSummary& c) {
    return Json{{"checked", c.checked}, {"wrong_sign", c.wrong_sign}, {"zero", c.zero}};
}

}  // namespace

Json to_json(const VerdictReport& report) {
    Json j;
    j["pass"] = report.pass;
    j["minors_checked"] = report.minors_checked;
    if (report.witness) {
        const auto& w = *report.witness;
        Json witness;
        witness["description"] = w.description;
        witness["rows"] = w.rows;
        witness["cols"] = w.cols;
        witness["value"] = to_string(w.value);
        if (!w.path.empty()) witness["path"] = w.path;
        j["witness"] = std::move(witness);
    }
    return j;
}

Json to_json(const HypothesisReport& report) {
    Json j;
    j["all_hold"] = report.all_hold;
    j["ttp"] = to_json(report.ttp);
    j["det"] = to_string(report.det_value);
    j["det_positive"] = report.det_positive;
    Json pendants;
    for (const auto& [vertex, verdict] : report.pendant_reports)
        pendants[std::to_string(vertex)] = to_json(verdict);
    j["pendant_p_matrix"] = std::move(pendants);
    return j;
}

Json to_json(const SignPatternReport& report) {
    Json j;
    j["clean"] = report.clean();
    j["entry_signs"] = signs_as_rows(report.entry_signs, report.n);
    j["expected"] = signs_as_rows(report.expected, report.n);
    Json mism = Json::array();
    for (const auto& m : report.mismatches)
        mism.push_back(Json{{"row", m.row},
                            {"col", m.col},
                            {"actual", m.actual},
                            {"expected", m.expected}});
    j["mismatches"] = std::move(mism);
    j["classes"] = Json{{"pendant_pendant", class_summary(report.pendant_pendant)},
                        {"pendant_other", class_summary(report.pendant_other)},
                        {"other_other", class_summary(report.other_other)}};
    return j;
}

Json to_json(const EigenPair& pair) {
    Json j;
    j["value"] = pair.value;
    j["vector"] = std::vector<double>(pair.vector.data(),
                                      pair.vector.data() + pair.vector.size());
    j["residual"] = pair.residual;
    j["simple"] = pair.simple;
    return j;
}

const char* to_string(TheoremStatus status) {
    switch (status) {
        case TheoremStatus::hypotheses_not_met: return "hypotheses_not_met";
        case TheoremStatus::pass: return "pass";
        case TheoremStatus::fail: return "fail";
        case TheoremStatus::solver_error: return "solver_error";
    }
    return "unknown";
}

Json to_json(const TheoremVerdict& verdict) {
    Json j;
    j["status"] = to_string(verdict.status);
    j["hypotheses"] = to_json(verdict.hypotheses);
    if (verdict.status != TheoremStatus::hypotheses_not_met)
        j["adjoint_sign_pattern"] = to_json(verdict.sign_pattern);
    if (verdict.smallest) j["smallest_eigenpair"] = to_json(*verdict.smallest);
    if (verdict.status == TheoremStatus::pass || verdict.status == TheoremStatus::fail) {
        j["signing"] = to_json(verdict.signing);
        j["routes_agree"] = verdict.routes_agree;
    }
    if (!verdict.error.empty()) j["error"] = verdict.error;
    return j;
}

Json to_json(const SearchOutcome& outcome) {
    Json j;
    j["found"] = outcome.found;
    j["evaluations"] = outcome.evaluations;
    j["final_score"] = to_string(outcome.final_score);
    if (outcome.matrix) {
        j["matrix"] = format_matrix(*outcome.matrix);
        j["hypotheses_hold"] = outcome.hypotheses_hold;
    }
    return j;
}

}  // namespace treetp
