#pragma once

#include <string>
#include <vector>

#include "scenic/eval.hpp"

namespace scenic {

std::string learner_name(LearnerKind kind);
std::string ensemble_name(EnsembleWrap wrap);
std::string mode_name(CvMode mode);

// "J48", "Bagging with RF", ...
std::string combo_name(LearnerKind kind, EnsembleWrap wrap);

// Machine-readable report: accuracy, macro_precision (number or the
// string "undefined"), macro_recall, per_class[], confusion_matrix,
// mode, seed and a caller-provided pipeline description.
std::string report_to_json(const EvalReport& report, CvMode mode, std::uint64_t seed,
                           const PipelineSpec& spec, std::size_t k_folds);

// Several labelled reports as one JSON document (the all-combos table).
struct NamedReport {
    std::string name;
    PipelineSpec spec;
    EvalReport report;
};
std::string reports_to_json(const std::vector<NamedReport>& reports, CvMode mode,
                            std::uint64_t seed, std::size_t k_folds);

// Accuracy / precision / recall table, two decimals, "undefined" where
// macro precision has no value.
std::string format_table(const std::vector<NamedReport>& reports);

// CSV summary: one row per pipeline (classifier,accuracy,precision,recall).
std::string format_summary_csv(const std::vector<NamedReport>& reports);

// Write via a temp file + rename so failures never leave partial output.
void atomic_write(const std::string& path, const std::string& content);

}  // namespace scenic
