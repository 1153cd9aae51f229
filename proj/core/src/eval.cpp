#include "scenic/eval.hpp"

#include <algorithm>
#include <numeric>

#include "scenic/error.hpp"
#include "scenic/rng.hpp"

namespace scenic {

std::size_t ConfusionMatrix::total() const {
    std::size_t t = 0;
    for (const auto& row : counts) t += std::accumulate(row.begin(), row.end(), std::size_t{0});
    return t;
}

ConfusionMatrix ConfusionMatrix::zero(const std::vector<ClassLabel>& classes) {
    ConfusionMatrix cm;
    cm.classes = classes;
    cm.counts.assign(classes.size(), std::vector<std::size_t>(classes.size(), 0));
    return cm;
}

EvalReport metrics(const ConfusionMatrix& cm) {
    const std::size_t k = cm.classes.size();
    const std::size_t total = cm.total();
    if (k == 0 || total == 0) throw DataError("metrics on an empty confusion matrix");

    EvalReport report;
    report.confusion = cm;

    std::size_t trace = 0;
    for (std::size_t i = 0; i < k; ++i) trace += cm.counts[i][i];
    report.accuracy = 100.0 * static_cast<double>(trace) / static_cast<double>(total);

    double precision_sum = 0.0;
    bool precision_defined = true;
    double recall_sum = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t col = 0, row = 0;
        for (std::size_t j = 0; j < k; ++j) {
            col += cm.counts[j][i];
            row += cm.counts[i][j];
        }
        PerClassMetrics pc;
        pc.support = row;
        if (col == 0) {
            precision_defined = false;  // 0/0: the class is never predicted
        } else {
            pc.precision =
                100.0 * static_cast<double>(cm.counts[i][i]) / static_cast<double>(col);
            precision_sum += *pc.precision;
        }
        pc.recall =
            row == 0 ? 0.0
                     : 100.0 * static_cast<double>(cm.counts[i][i]) / static_cast<double>(row);
        recall_sum += pc.recall;
        report.per_class.push_back(pc);
    }
    if (precision_defined)
        report.macro_precision = precision_sum / static_cast<double>(k);
    report.macro_recall = recall_sum / static_cast<double>(k);
    return report;
}

std::vector<std::vector<std::size_t>> stratified_folds(const Dataset& ds, std::size_t k,
                                                       std::uint64_t seed) {
    if (k < 2) throw DataError("cross-validation needs k >= 2");
    if (k > ds.rows.size())
        throw DataError("k = " + std::to_string(k) + " exceeds dataset size " +
                        std::to_string(ds.rows.size()));

    std::vector<std::vector<std::size_t>> per_class(ds.n_classes());
    for (std::size_t i = 0; i < ds.rows.size(); ++i)
        per_class[ds.rows[i].label].push_back(i);

    std::vector<std::vector<std::size_t>> folds(k);
    for (std::size_t c = 0; c < per_class.size(); ++c) {
        auto& idx = per_class[c];
        Rng rng = Rng::substream(seed, c);
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[rng.below(i)]);
        for (std::size_t i = 0; i < idx.size(); ++i) folds[i % k].push_back(idx[i]);
    }
    for (auto& fold : folds) std::sort(fold.begin(), fold.end());
    return folds;
}

Model train_pipeline(const PipelineSpec& spec, const Dataset& ds, std::uint64_t seed) {
    switch (spec.ensemble) {
        case EnsembleWrap::bagging:
            return bag(spec.learner, ds, spec.iterations, seed);
        case EnsembleWrap::boosting:
            return boost(spec.learner, ds, spec.iterations, seed);
        default:
            return train_learner(spec.learner, ds, seed);
    }
}

namespace {

Dataset subset(const Dataset& ds, const std::vector<std::size_t>& indices) {
    Dataset out;
    out.class_set = ds.class_set;
    out.rows.reserve(indices.size());
    for (std::size_t i : indices) out.rows.push_back(ds.rows[i]);
    return out;
}

}  // namespace

EvalReport cross_validate(const PipelineSpec& spec, const Dataset& ds, std::size_t k,
                          std::uint64_t seed, CvMode mode) {
    const Dataset* eval_ds = &ds;
    Dataset balanced;
    if (mode == CvMode::paper_faithful && spec.smote) {
        balanced = balance(ds, spec.smote_params, Rng::derive_seed(seed, 0x5'0'7'e));
        eval_ds = &balanced;
    }

    const auto folds = stratified_folds(*eval_ds, k, Rng::derive_seed(seed, 0xf01d));
    ConfusionMatrix pooled = ConfusionMatrix::zero(eval_ds->class_set);
    std::vector<EvalReport> fold_reports;

    for (std::size_t f = 0; f < k; ++f) {
        std::vector<std::size_t> train_idx;
        for (std::size_t g = 0; g < k; ++g)
            if (g != f) train_idx.insert(train_idx.end(), folds[g].begin(), folds[g].end());
        std::sort(train_idx.begin(), train_idx.end());

        Dataset train = subset(*eval_ds, train_idx);
        if (mode == CvMode::leakage_safe && spec.smote)
            train = balance(train, spec.smote_params, Rng::derive_seed(seed, 0x5'0'7'e + f));

        const Model model = train_pipeline(spec, train, Rng::derive_seed(seed, f));

        ConfusionMatrix fold_cm = ConfusionMatrix::zero(eval_ds->class_set);
        for (std::size_t i : folds[f]) {
            const auto& row = eval_ds->rows[i];
            const auto pred = predict(model, row.features);
            fold_cm.add(row.label, pred.class_index);
            pooled.add(row.label, pred.class_index);
        }
        fold_reports.push_back(metrics(fold_cm));
    }

    EvalReport report = metrics(pooled);
    report.fold_reports = std::move(fold_reports);
    return report;
}

}  // namespace scenic
