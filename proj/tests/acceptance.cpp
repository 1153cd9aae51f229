// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. The CLI-driven criteria shell out to the scenic
// binary (path injected at compile time).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <unistd.h>
#include <vector>

#include "scenic/dataset.hpp"
#include "scenic/ensemble.hpp"
#include "scenic/eval.hpp"
#include "scenic/report.hpp"
#include "scenic/rng.hpp"
#include "scenic/smote.hpp"
#include "scenic/tree.hpp"

namespace fs = std::filesystem;
using namespace scenic;

namespace {

struct AcceptanceCheck {
    std::string name;
    std::function<bool(std::string&)> check;  // fills a failure detail
};

std::vector<ClassLabel> make_classes(std::size_t n) {
    std::vector<ClassLabel> out;
    for (std::size_t c = 0; c < n; ++c)
        out.push_back(ClassLabel::from_rating(2.0 + 0.5 * static_cast<double>(c)));
    return out;
}

// ---------------------------------------------------------------- splits

using Criterion_t = scenic::Criterion;

// Independent exhaustive scorer (recounts partitions from scratch).
std::optional<SplitCandidate> exhaustive_split_impl(const Dataset& ds,
                                                    const std::vector<std::size_t>& indices,
                                                    std::size_t feature,
                                                    Criterion_t criterion) {
    std::vector<double> values;
    for (std::size_t i : indices) values.push_back(ds.rows[i].features[feature]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) return std::nullopt;

    std::vector<double> total(ds.n_classes(), 0.0);
    for (std::size_t i : indices) total[ds.rows[i].label] += 1.0;
    const double h_total = entropy(total);
    const double dn = static_cast<double>(indices.size());

    struct Cand {
        double threshold, gain, split_info;
    };
    std::vector<Cand> cands;
    for (std::size_t v = 0; v + 1 < values.size(); ++v) {
        const double threshold = (values[v] + values[v + 1]) / 2.0;
        std::vector<double> left(ds.n_classes(), 0.0), right(ds.n_classes(), 0.0);
        double nl = 0.0;
        for (std::size_t i : indices) {
            if (ds.rows[i].features[feature] <= threshold) {
                left[ds.rows[i].label] += 1.0;
                nl += 1.0;
            } else {
                right[ds.rows[i].label] += 1.0;
            }
        }
        const double pl = nl / dn, pr = 1.0 - pl;
        const double gain = h_total - pl * entropy(left) - pr * entropy(right);
        cands.push_back({threshold, gain, -pl * std::log2(pl) - pr * std::log2(pr)});
    }

    if (criterion == Criterion_t::info_gain) {
        const Cand* best = &cands.front();
        for (const auto& c : cands)
            if (c.gain > best->gain) best = &c;
        return SplitCandidate{best->threshold, best->gain};
    }
    double mean = 0.0;
    for (const auto& c : cands) mean += c.gain;
    mean /= static_cast<double>(cands.size());
    const Cand* best = nullptr;
    double best_ratio = 0.0;
    for (const auto& c : cands) {
        if (c.gain + 1e-12 < mean) continue;
        const double ratio = c.split_info > 0.0 ? c.gain / c.split_info : 0.0;
        if (!best || ratio > best_ratio) {
            best = &c;
            best_ratio = ratio;
        }
    }
    return SplitCandidate{best->threshold, best_ratio};
}

bool check_split_oracle(std::string& detail) {
    Rng rng(0xACCE5501);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + rng.below(31);
        const std::size_t n_classes = 2 + rng.below(5);
        const std::size_t n_features = 1 + rng.below(4);
        Dataset ds;
        ds.class_set = make_classes(n_classes);
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector fv;
            fv.location_id = std::to_string(i);
            for (std::size_t f = 0; f < n_features; ++f)
                fv.features[f] = rng.below(2) ? static_cast<double>(rng.below(10))
                                              : rng.uniform() * 10.0;
            fv.label = rng.below(n_classes);
            ds.rows.push_back(fv);
        }
        std::vector<std::size_t> indices(n);
        std::iota(indices.begin(), indices.end(), 0);
        for (std::size_t f = 0; f < n_features; ++f) {
            for (auto criterion : {Criterion_t::info_gain, Criterion_t::gain_ratio}) {
                auto got = best_split(ds, indices, f, criterion);
                auto want = exhaustive_split_impl(ds, indices, f, criterion);
                if (got.has_value() != want.has_value()) {
                    detail = "presence mismatch, trial " + std::to_string(trial);
                    return false;
                }
                if (got && (got->threshold != want->threshold || got->score != want->score)) {
                    detail = "value mismatch, trial " + std::to_string(trial) + ": got (" +
                             std::to_string(got->threshold) + ", " +
                             std::to_string(got->score) + ") want (" +
                             std::to_string(want->threshold) + ", " +
                             std::to_string(want->score) + ")";
                    return false;
                }
            }
        }
    }
    return true;
}

// --------------------------------------------------------- consistent fit

bool check_consistent_fit(std::string& detail) {
    Rng rng(0xACCE5502);
    const TreeParams params{Criterion_t::info_gain, 1, 0, Pruning::none, 0.25, 1.0 / 3.0};
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 10 + rng.below(40);
        const std::size_t n_classes = 2 + rng.below(4);
        Dataset ds;
        ds.class_set = make_classes(n_classes);
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector fv;
            fv.location_id = std::to_string(i);
            for (auto& f : fv.features) f = rng.uniform();  // continuous => consistent
            fv.label = rng.below(n_classes);
            ds.rows.push_back(fv);
        }
        Model model = train_tree(ds, params, trial);
        for (const auto& row : ds.rows) {
            if (predict(model, row.features).class_index != row.label) {
                detail = "misfit on trial " + std::to_string(trial);
                return false;
            }
        }
    }
    return true;
}

// ------------------------------------------------------------------ SMOTE

bool on_segment(const FeatureVector& s, const FeatureVector& a, const FeatureVector& b) {
    double dot = 0.0, norm = 0.0;
    for (std::size_t f = 0; f < kNumFeatures; ++f) {
        const double d = b.features[f] - a.features[f];
        dot += (s.features[f] - a.features[f]) * d;
        norm += d * d;
    }
    const double t = norm > 0.0 ? dot / norm : 0.0;
    if (t < -1e-9 || t > 1.0 + 1e-9) return false;
    for (std::size_t f = 0; f < kNumFeatures; ++f) {
        const double expect = a.features[f] + t * (b.features[f] - a.features[f]);
        if (std::abs(expect - s.features[f]) > 1e-9) return false;
    }
    return true;
}

bool check_smote_geometry(std::string& detail) {
    Rng rng(0xACCE5503);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng.below(15);
        const std::size_t k = 1 + rng.below(6);
        std::vector<FeatureVector> rows;
        for (std::size_t i = 0; i < n; ++i) {
            FeatureVector fv;
            fv.location_id = "m" + std::to_string(i);
            for (auto& f : fv.features) f = rng.uniform() * 100.0;
            rows.push_back(fv);
        }
        Rng gen(trial);
        const std::size_t n_synthetic = 1 + rng.below(2 * n);
        auto synthetic = smote_class(rows, n_synthetic, k, gen);
        if (synthetic.size() != n_synthetic) {
            detail = "wrong synthetic count, trial " + std::to_string(trial);
            return false;
        }
        const std::size_t eff_k = std::min(k, rows.size() - 1);
        for (const auto& s : synthetic) {
            bool found = false;
            for (std::size_t i = 0; i < rows.size() && !found; ++i) {
                std::vector<std::pair<double, std::size_t>> dists;
                for (std::size_t j = 0; j < rows.size(); ++j) {
                    if (j == i) continue;
                    double d = 0.0;
                    for (std::size_t f = 0; f < kNumFeatures; ++f) {
                        const double diff = rows[i].features[f] - rows[j].features[f];
                        d += diff * diff;
                    }
                    dists.emplace_back(d, j);
                }
                std::sort(dists.begin(), dists.end());
                for (std::size_t nb = 0; nb < eff_k && !found; ++nb)
                    found = on_segment(s, rows[i], rows[dists[nb].second]);
            }
            if (!found) {
                detail = "synthetic point off every base-neighbor segment, trial " +
                         std::to_string(trial);
                return false;
            }
        }
    }

    // balance hits exact per-class targets
    Rng data_rng(0xACCE5513);
    Dataset ds;
    ds.class_set = make_classes(4);
    const std::size_t sizes[4] = {3, 11, 7, 25};
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t i = 0; i < sizes[c]; ++i) {
            FeatureVector fv;
            fv.location_id = "c" + std::to_string(c) + "_" + std::to_string(i);
            for (auto& f : fv.features) f = data_rng.uniform();
            fv.label = c;
            ds.rows.push_back(fv);
        }
    }
    auto counts = balance(ds, SmoteParams{}, 99).class_counts();
    for (std::size_t c = 0; c < 4; ++c) {
        if (counts[c] != 25) {
            detail = "class " + std::to_string(c) + " balanced to " +
                     std::to_string(counts[c]) + ", want 25";
            return false;
        }
    }
    SmoteParams explicit_target;
    explicit_target.target_count = 40;
    counts = balance(ds, explicit_target, 99).class_counts();
    for (std::size_t c = 0; c < 4; ++c) {
        if (counts[c] != 40) {
            detail = "explicit target missed for class " + std::to_string(c);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- metrics

bool check_metrics_bruteforce(std::string& detail) {
    Rng rng(0xACCE5504);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = 2 + rng.below(6);
        const std::size_t n = 5 + rng.below(120);
        const std::size_t pred_limit = 1 + rng.below(k);  // often leaves empty columns
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        ConfusionMatrix cm = ConfusionMatrix::zero(make_classes(k));
        for (std::size_t i = 0; i < n; ++i) {
            pairs.emplace_back(rng.below(k), rng.below(pred_limit));
            cm.add(pairs.back().first, pairs.back().second);
        }
        const auto report = metrics(cm);

        std::size_t correct = 0;
        for (const auto& [t, p] : pairs)
            if (t == p) ++correct;
        if (std::abs(report.accuracy - 100.0 * static_cast<double>(correct) /
                                           static_cast<double>(n)) > 1e-9) {
            detail = "accuracy mismatch, trial " + std::to_string(trial);
            return false;
        }

        bool any_undefined = false;
        double precision_sum = 0.0;
        double recall_sum = 0.0;
        for (std::size_t c = 0; c < k; ++c) {
            std::size_t tp = 0, predicted = 0, actual = 0;
            for (const auto& [t, p] : pairs) {
                tp += (t == c && p == c) ? 1 : 0;
                predicted += p == c ? 1 : 0;
                actual += t == c ? 1 : 0;
            }
            if (predicted == 0) {
                any_undefined = true;
                if (report.per_class[c].precision) {
                    detail = "expected undefined precision, trial " + std::to_string(trial);
                    return false;
                }
            } else {
                const double want =
                    100.0 * static_cast<double>(tp) / static_cast<double>(predicted);
                if (!report.per_class[c].precision ||
                    std::abs(*report.per_class[c].precision - want) > 1e-9) {
                    detail = "class precision mismatch, trial " + std::to_string(trial);
                    return false;
                }
                precision_sum += want;
            }
            const double want_recall =
                actual == 0 ? 0.0 : 100.0 * static_cast<double>(tp) / static_cast<double>(actual);
            if (std::abs(report.per_class[c].recall - want_recall) > 1e-9) {
                detail = "class recall mismatch, trial " + std::to_string(trial);
                return false;
            }
            recall_sum += want_recall;
        }
        if (any_undefined != !report.macro_precision) {
            detail = "macro precision definedness mismatch, trial " + std::to_string(trial);
            return false;
        }
        if (!any_undefined &&
            std::abs(*report.macro_precision - precision_sum / static_cast<double>(k)) > 1e-9) {
            detail = "macro precision mismatch, trial " + std::to_string(trial);
            return false;
        }
        if (std::abs(report.macro_recall - recall_sum / static_cast<double>(k)) > 1e-9) {
            detail = "macro recall mismatch, trial " + std::to_string(trial);
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------- boosting

bool check_boosting_invariants(std::string& detail) {
    // (a) weights renormalize to 1 after every kept round
    Rng rng(0xACCE5505);
    Dataset noisy;
    noisy.class_set = make_classes(2);
    for (int i = 0; i < 60; ++i) {
        FeatureVector fv;
        fv.location_id = std::to_string(i);
        fv.features[0] = rng.uniform();
        fv.label = fv.features[0] > 0.5 ? 1u : 0u;
        if (i % 8 == 0) fv.label = 1 - fv.label;
        noisy.rows.push_back(fv);
    }
    LearnerSpec stump = make_learner(LearnerKind::j48);
    stump.tree = TreeParams{Criterion_t::info_gain, 1, 1, Pruning::none, 0.25, 1.0 / 3.0};
    std::vector<BoostRound> trace;
    boost(stump, noisy, 8, 11, &trace);
    for (const auto& round : trace) {
        if (round.kept && std::abs(round.weight_sum_after - 1.0) > 1e-9) {
            detail = "weight sum " + std::to_string(round.weight_sum_after);
            return false;
        }
    }

    // (b) e = 0 early stop yields a single member
    Dataset separable;
    separable.class_set = make_classes(2);
    for (int i = 0; i < 10; ++i) {
        FeatureVector fv;
        fv.location_id = std::to_string(i);
        fv.features[0] = i < 5 ? 0.0 + 0.1 * i : 10.0 + 0.1 * i;
        fv.label = i < 5 ? 0u : 1u;
        separable.rows.push_back(fv);
    }
    LearnerSpec exact = make_learner(LearnerKind::j48);
    exact.tree = TreeParams{Criterion_t::info_gain, 1, 0, Pruning::none, 0.25, 1.0 / 3.0};
    Model perfect = boost(exact, separable, 10, 5);
    if (std::get<EnsembleModel>(perfect.value).members.size() != 1) {
        detail = "early stop kept " +
                 std::to_string(std::get<EnsembleModel>(perfect.value).members.size()) +
                 " members";
        return false;
    }

    // (c) member weight for e = 1/4 equals ln 3 to 1e-12
    Dataset quarters;
    quarters.class_set = make_classes(2);
    for (int i = 0; i < 4; ++i) {
        FeatureVector fv;
        fv.location_id = std::to_string(i);
        fv.features[0] = 1.0;  // indistinguishable rows force a constant stump
        fv.label = i == 3 ? 1u : 0u;
        quarters.rows.push_back(fv);
    }
    trace.clear();
    boost(make_learner(LearnerKind::j48), quarters, 3, 7, &trace);
    bool saw = false;
    for (const auto& round : trace) {
        if (!round.kept) continue;
        saw = true;
        if (std::abs(round.error - 0.25) > 1e-12 ||
            std::abs(round.member_weight - std::log(3.0)) > 1e-12) {
            detail = "round error " + std::to_string(round.error) + ", weight " +
                     std::to_string(round.member_weight);
            return false;
        }
    }
    if (!saw) {
        detail = "no kept round in the e = 1/4 construction";
        return false;
    }
    return true;
}

// ----------------------------------------------------- synthetic datasets

Dataset chance_dataset(std::uint64_t seed) {
    Rng rng(seed);
    Dataset ds;
    ds.class_set = make_classes(6);
    for (int i = 0; i < 600; ++i) {
        FeatureVector fv;
        fv.location_id = "r" + std::to_string(i);
        for (auto& f : fv.features) f = rng.uniform();
        fv.label = static_cast<std::size_t>(i % 6);  // balanced, feature-independent
        ds.rows.push_back(fv);
    }
    return ds;
}

Dataset planted_dataset(std::uint64_t seed) {
    Rng rng(seed);
    Dataset ds;
    ds.class_set = make_classes(4);
    for (int i = 0; i < 600; ++i) {
        FeatureVector fv;
        fv.location_id = "r" + std::to_string(i);
        for (auto& f : fv.features) f = rng.uniform();
        // class = number of planted features above threshold, with 2% noise
        std::size_t label = 0;
        for (std::size_t f : {std::size_t{1}, std::size_t{4}, std::size_t{8}})
            label += fv.features[f] > 0.5 ? 1 : 0;
        if (rng.below(50) == 0) label = rng.below(4);
        fv.label = label;
        ds.rows.push_back(fv);
    }
    return ds;
}

bool check_chance_level(std::string& detail) {
    const Dataset ds = chance_dataset(0xACCE5506);
    for (auto kind : {LearnerKind::j48, LearnerKind::reptree, LearnerKind::rf}) {
        for (auto wrap : {EnsembleWrap::none, EnsembleWrap::bagging, EnsembleWrap::boosting}) {
            PipelineSpec spec;
            spec.learner = make_learner(kind);
            spec.learner.forest.n_trees = 25;
            spec.ensemble = wrap;
            spec.iterations = 5;
            spec.smote = false;
            const auto report = cross_validate(spec, ds, 10, 21, CvMode::leakage_safe);
            if (std::abs(report.accuracy - 100.0 / 6.0) > 5.0) {
                detail = combo_name(kind, wrap) + " accuracy " +
                         std::to_string(report.accuracy) + " outside 16.67 +/- 5";
                return false;
            }
        }
    }
    return true;
}

bool check_planted_signal(std::string& detail) {
    const Dataset ds = planted_dataset(0xACCE5507);
    PipelineSpec spec;
    spec.learner = make_learner(LearnerKind::rf);
    spec.ensemble = EnsembleWrap::bagging;
    const auto report = cross_validate(spec, ds, 10, 33, CvMode::leakage_safe);
    if (report.accuracy < 90.0) {
        detail = "bagged RF accuracy " + std::to_string(report.accuracy) + " < 90";
        return false;
    }
    return true;
}

bool check_leakage_demo(std::string& detail) {
    Rng rng(0xACCE5508);
    Dataset ds;
    ds.class_set = make_classes(2);
    for (int i = 0; i < 105; ++i) {
        FeatureVector fv;
        fv.location_id = "r" + std::to_string(i);
        for (auto& f : fv.features) f = rng.uniform();  // overlapping distributions
        fv.label = i < 100 ? 0u : 1u;                   // 100:5 imbalance
        ds.rows.push_back(fv);
    }
    PipelineSpec spec;
    spec.learner = make_learner(LearnerKind::j48);
    const std::uint64_t seed = 404;

    const auto faithful = cross_validate(spec, ds, 5, seed, CvMode::paper_faithful);
    const auto safe = cross_validate(spec, ds, 5, seed, CvMode::leakage_safe);
    const double faithful_minority_recall = faithful.per_class[1].recall;
    const double safe_minority_recall = safe.per_class[1].recall;
    if (!(faithful_minority_recall > safe_minority_recall)) {
        detail = "minority recall paper_faithful " + std::to_string(faithful_minority_recall) +
                 " vs leakage_safe " + std::to_string(safe_minority_recall);
        return false;
    }
    return true;
}

// --------------------------------------------------------------- CLI runs

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() /
               ("scenic_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string& args, const fs::path& stdout_path = {}) {
    std::string cmd = std::string(SCENIC_CLI_PATH) + " " + args;
    cmd += stdout_path.empty() ? " >/dev/null" : " >" + stdout_path.string();
    cmd += " 2>/dev/null";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_dataset_file(const Dataset& ds, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    write_dataset(out, ds);
}

bool check_structural_replication(std::string& detail) {
    const auto dir = scratch_dir();
    write_dataset_file(planted_dataset(0xACCE5509), dir / "ds.csv");

    const std::string base = "run --dataset " + (dir / "ds.csv").string() +
                             " --all-combos --k-folds 5 --trees 15 --iterations 3 --seed 8 "
                             "--out ";
    if (run_cli(base + (dir / "a.json").string(), dir / "a.txt") != 0) {
        detail = "first all-combos run failed";
        return false;
    }
    if (run_cli(base + (dir / "b.json").string(), dir / "b.txt") != 0) {
        detail = "second all-combos run failed";
        return false;
    }
    if (slurp(dir / "a.json") != slurp(dir / "b.json") ||
        slurp(dir / "a.txt") != slurp(dir / "b.txt")) {
        detail = "repeated runs are not byte-identical";
        return false;
    }

    // table shape: header + 6 combination rows, 4 columns each
    std::istringstream table(slurp(dir / "a.txt"));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(table, line))
        if (!line.empty()) lines.push_back(line);
    if (lines.size() != 7) {
        detail = "expected 7 table lines, got " + std::to_string(lines.size());
        return false;
    }
    const char* expected[6] = {"Bagging with J48", "Bagging with REPTree", "Bagging with RF",
                               "Boosting with J48", "Boosting with REPTree",
                               "Boosting with RF"};
    for (int i = 0; i < 6; ++i) {
        if (lines[static_cast<std::size_t>(i) + 1].rfind(expected[i], 0) != 0) {
            detail = "row " + std::to_string(i + 1) + " is not '" + expected[i] + "'";
            return false;
        }
    }
    for (const char* header : {"Accuracy", "Precision", "Recall"}) {
        if (lines[0].find(header) == std::string::npos) {
            detail = std::string("missing header column ") + header;
            return false;
        }
    }
    return true;
}

bool check_thread_determinism(std::string& detail) {
    const auto dir = scratch_dir();
    write_dataset_file(planted_dataset(0xACCE550A), dir / "planted.csv");

    const std::string base = "run --dataset " + (dir / "planted.csv").string() +
                             " --learner rf --trees 40 --k-folds 5 --seed 17 --out ";
    if (run_cli(base + (dir / "t1.json").string() + " --threads 1") != 0 ||
        run_cli(base + (dir / "t8.json").string() + " --threads 8") != 0) {
        detail = "cli run failed";
        return false;
    }
    if (slurp(dir / "t1.json") != slurp(dir / "t8.json")) {
        detail = "reports differ between --threads 1 and --threads 8";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<AcceptanceCheck> criteria = {
        {"oracle equivalence: best_split vs exhaustive scorer", check_split_oracle},
        {"consistent-data fit: unpruned trees reach 100% training accuracy",
         check_consistent_fit},
        {"SMOTE geometry: synthetic points on neighbor segments, exact targets",
         check_smote_geometry},
        {"metrics brute-force recount incl. undefined precision", check_metrics_bruteforce},
        {"boosting invariants: weight sums, early stop, ln 3", check_boosting_invariants},
        {"chance-level sanity across all learner/ensemble combinations", check_chance_level},
        {"planted-signal sanity: bagged RF >= 90% accuracy", check_planted_signal},
        {"leakage demonstration: paper_faithful inflates minority recall",
         check_leakage_demo},
        {"structural replication: all-combos table shape and determinism",
         check_structural_replication},
        {"determinism across thread counts", check_thread_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criterion.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        std::cout << (ok ? "PASS" : "FAIL") << " — " << criterion.name << " ("
                  << elapsed << " ms)";
        if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
