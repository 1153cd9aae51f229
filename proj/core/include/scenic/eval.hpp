#pragma once

#include <optional>
#include <vector>

#include "scenic/dataset.hpp"
#include "scenic/ensemble.hpp"
#include "scenic/smote.hpp"

namespace scenic {

struct ConfusionMatrix {
    std::vector<ClassLabel> classes;
    // counts[i][j] = instances of true class i predicted as class j
    std::vector<std::vector<std::size_t>> counts;

    std::size_t total() const;
    void add(std::size_t truth, std::size_t predicted) { ++counts[truth][predicted]; }
    static ConfusionMatrix zero(const std::vector<ClassLabel>& classes);
};

struct PerClassMetrics {
    std::optional<double> precision;  // percent; nullopt when the class is never predicted
    double recall = 0.0;              // percent
    std::size_t support = 0;
};

struct EvalReport {
    double accuracy = 0.0;                  // percent
    std::optional<double> macro_precision;  // undefined if any class precision is
    double macro_recall = 0.0;
    std::vector<PerClassMetrics> per_class;
    ConfusionMatrix confusion;
    std::vector<EvalReport> fold_reports;  // empty for per-fold entries themselves
};

// Accuracy plus macro precision/recall from a pooled confusion matrix.
// A never-predicted class has undefined (0/0) precision, which propagates
// to the macro average.
EvalReport metrics(const ConfusionMatrix& cm);

// Seeded stratified partition into k disjoint index sets; per-class fold
// counts differ by at most one.
std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& ds, std::size_t k,
                                                       std::uint64_t seed);

enum class EnsembleWrap { none, bagging, boosting };
enum class CvMode { paper_faithful, leakage_safe };

struct PipelineSpec {
    LearnerSpec learner;
    EnsembleWrap ensemble = EnsembleWrap::none;
    std::size_t iterations = 10;
    bool smote = true;
    SmoteParams smote_params;
};

Model train_pipeline(const PipelineSpec& spec, const Dataset& ds, std::uint64_t seed);

// k-fold cross-validation, pooling all test-fold predictions.
// paper_faithful balances the whole dataset before folding (synthetic
// neighbors leak across folds, as in the original study); leakage_safe
// folds the raw data and balances each training split only.
EvalReport cross_validate(const PipelineSpec& spec, const Dataset& ds, std::size_t k,
                          std::uint64_t seed, CvMode mode);

}  // namespace scenic
