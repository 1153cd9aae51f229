#include "scenic/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "scenic/error.hpp"

namespace scenic {

namespace {

using nlohmann::json;

json precision_json(const std::optional<double>& p) {
    if (p) return *p;
    return "undefined";
}

json spec_to_json(const PipelineSpec& spec, std::size_t k_folds) {
    json smote;
    if (spec.smote) {
        smote = {{"k_neighbors", spec.smote_params.k_neighbors}};
        if (spec.smote_params.target_count) smote["target_count"] = *spec.smote_params.target_count;
        if (spec.smote_params.target_percent)
            smote["target_percent"] = *spec.smote_params.target_percent;
    }
    return {{"learner", learner_name(spec.learner.kind)},
            {"ensemble", ensemble_name(spec.ensemble)},
            {"iterations", spec.iterations},
            {"smote", std::move(smote)},
            {"k_folds", k_folds}};
}

json report_body(const EvalReport& report) {
    json per_class = json::array();
    for (std::size_t i = 0; i < report.per_class.size(); ++i) {
        const auto& pc = report.per_class[i];
        per_class.push_back({{"class", report.confusion.classes[i].str()},
                             {"precision", precision_json(pc.precision)},
                             {"recall", pc.recall},
                             {"support", pc.support}});
    }
    json matrix = json::array();
    for (const auto& row : report.confusion.counts) matrix.push_back(row);
    return {{"accuracy", report.accuracy},
            {"macro_precision", precision_json(report.macro_precision)},
            {"macro_recall", report.macro_recall},
            {"per_class", std::move(per_class)},
            {"confusion_matrix", std::move(matrix)}};
}

}  // namespace

std::string learner_name(LearnerKind kind) {
    switch (kind) {
        case LearnerKind::j48: return "J48";
        case LearnerKind::reptree: return "REPTree";
        default: return "RF";
    }
}

std::string ensemble_name(EnsembleWrap wrap) {
    switch (wrap) {
        case EnsembleWrap::bagging: return "bagging";
        case EnsembleWrap::boosting: return "boosting";
        default: return "none";
    }
}

std::string mode_name(CvMode mode) {
    return mode == CvMode::paper_faithful ? "paper_faithful" : "leakage_safe";
}

std::string combo_name(LearnerKind kind, EnsembleWrap wrap) {
    switch (wrap) {
        case EnsembleWrap::bagging: return "Bagging with " + learner_name(kind);
        case EnsembleWrap::boosting: return "Boosting with " + learner_name(kind);
        default: return learner_name(kind);
    }
}

std::string report_to_json(const EvalReport& report, CvMode mode, std::uint64_t seed,
                           const PipelineSpec& spec, std::size_t k_folds) {
    json doc = report_body(report);
    doc["mode"] = mode_name(mode);
    doc["seed"] = seed;
    doc["pipeline"] = spec_to_json(spec, k_folds);
    return doc.dump(2);
}

std::string reports_to_json(const std::vector<NamedReport>& reports, CvMode mode,
                            std::uint64_t seed, std::size_t k_folds) {
    json results = json::array();
    for (const auto& nr : reports) {
        json entry = report_body(nr.report);
        entry["classifier"] = nr.name;
        entry["pipeline"] = spec_to_json(nr.spec, k_folds);
        results.push_back(std::move(entry));
    }
    json doc = {{"mode", mode_name(mode)}, {"seed", seed}, {"results", std::move(results)}};
    return doc.dump(2);
}

namespace {

std::string two_decimals(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string precision_cell(const std::optional<double>& p) {
    return p ? two_decimals(*p) : std::string("Undefined");
}

}  // namespace

std::string format_table(const std::vector<NamedReport>& reports) {
    std::size_t name_width = std::string("Classifier").size();
    for (const auto& nr : reports) name_width = std::max(name_width, nr.name.size());

    std::ostringstream out;
    auto row = [&](const std::string& a, const std::string& b, const std::string& c,
                   const std::string& d) {
        out << a;
        out.width(static_cast<std::streamsize>(name_width - a.size() + 12));
        out << b;
        out.width(12);
        out << c;
        out.width(12);
        out << d;
        out << '\n';
    };
    row("Classifier", "Accuracy", "Precision", "Recall");
    for (const auto& nr : reports)
        row(nr.name, two_decimals(nr.report.accuracy),
            precision_cell(nr.report.macro_precision), two_decimals(nr.report.macro_recall));
    return out.str();
}

std::string format_summary_csv(const std::vector<NamedReport>& reports) {
    std::ostringstream out;
    out << "classifier,accuracy,precision,recall\n";
    for (const auto& nr : reports) {
        out << nr.name << ',' << two_decimals(nr.report.accuracy) << ','
            << (nr.report.macro_precision ? two_decimals(*nr.report.macro_precision)
                                          : std::string("undefined"))
            << ',' << two_decimals(nr.report.macro_recall) << '\n';
    }
    return out.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot open '" + tmp.string() + "' for writing");
        out << content;
        if (!out.flush()) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw DataError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw DataError("failed to move output into place at '" + path + "'");
    }
}

}  // namespace scenic
