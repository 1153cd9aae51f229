// Command-line front end for the location-rating pipeline:
//   ingest     photo + location CSVs -> feature dataset
//   histogram  dataset -> per-feature, per-class histogram CSV
//   smote      dataset -> class-balanced dataset
//   run        dataset -> cross-validated evaluation report
//   predict    serialized model + dataset -> predictions CSV
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "scenic/error.hpp"
#include "scenic/eval.hpp"
#include "scenic/features.hpp"
#include "scenic/geo.hpp"
#include "scenic/model_io.hpp"
#include "scenic/report.hpp"
#include "scenic/smote.hpp"

namespace {

using namespace scenic;

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    return in;
}

struct IngestArgs {
    std::string photos_path, locations_path, out_path;
    double radius_m = 100.0;
    bool drop_empty = false;
};

int cmd_ingest(const IngestArgs& args) {
    auto photos_in = open_input(args.photos_path);
    const auto photos = parse_photos(photos_in);
    auto locations_in = open_input(args.locations_path);
    const auto locations = parse_locations(locations_in);

    const auto assignment = assign_photos(photos, locations, args.radius_m);
    std::size_t assigned_pairs = 0;
    for (const auto& [id, idx] : assignment) assigned_pairs += idx.size();

    const Dataset ds = build_dataset(assignment, photos, locations, args.drop_empty);
    std::ostringstream out;
    write_dataset(out, ds);
    atomic_write(args.out_path, out.str());

    std::cout << "photos: " << photos.size() << "\n"
              << "locations: " << locations.size() << "\n"
              << "assignments: " << assigned_pairs << "\n"
              << "dataset rows: " << ds.rows.size() << "\n";
    return 0;
}

struct RunArgs {
    std::string dataset_path, out_path, summary_csv_path;
    std::string learner = "rf";
    std::string ensemble = "none";
    std::string mode = "leakage_safe";
    std::size_t iterations = 10;
    std::size_t k_folds = 10;
    std::uint64_t seed = 1;
    std::size_t threads = 1;
    bool no_smote = false;
    std::size_t smote_k = 5;
    std::size_t smote_target_count = 0;   // 0 = majority-class count
    double smote_target_percent = 0.0;    // 0 = unused
    std::size_t min_leaf = 0;             // 0 = learner default
    std::size_t max_depth = 0;
    std::size_t n_trees = 100;
    std::size_t features_per_split = 4;
    bool no_bootstrap = false;
    bool all_combos = false;
};

PipelineSpec make_spec(const RunArgs& args, LearnerKind kind, EnsembleWrap wrap) {
    PipelineSpec spec;
    spec.learner = make_learner(kind);
    spec.learner.threads = args.threads;
    if (args.min_leaf > 0) spec.learner.tree.min_leaf = args.min_leaf;
    spec.learner.tree.max_depth = args.max_depth;
    spec.learner.forest.n_trees = args.n_trees;
    spec.learner.forest.features_per_split = args.features_per_split;
    spec.learner.forest.bootstrap = !args.no_bootstrap;
    spec.ensemble = wrap;
    spec.iterations = args.iterations;
    spec.smote = !args.no_smote;
    spec.smote_params.k_neighbors = args.smote_k;
    if (args.smote_target_count > 0) spec.smote_params.target_count = args.smote_target_count;
    if (args.smote_target_percent > 0.0)
        spec.smote_params.target_percent = args.smote_target_percent;
    return spec;
}

LearnerKind parse_learner(const std::string& s) {
    if (s == "j48") return LearnerKind::j48;
    if (s == "reptree") return LearnerKind::reptree;
    return LearnerKind::rf;
}

EnsembleWrap parse_ensemble(const std::string& s) {
    if (s == "bagging") return EnsembleWrap::bagging;
    if (s == "boosting") return EnsembleWrap::boosting;
    return EnsembleWrap::none;
}

int cmd_run(const RunArgs& args) {
    auto in = open_input(args.dataset_path);
    const Dataset ds = read_dataset(in);
    const CvMode mode =
        args.mode == "paper_faithful" ? CvMode::paper_faithful : CvMode::leakage_safe;

    std::vector<NamedReport> reports;
    if (args.all_combos) {
        for (auto wrap : {EnsembleWrap::bagging, EnsembleWrap::boosting}) {
            for (auto kind : {LearnerKind::j48, LearnerKind::reptree, LearnerKind::rf}) {
                PipelineSpec spec = make_spec(args, kind, wrap);
                EvalReport report = cross_validate(spec, ds, args.k_folds, args.seed, mode);
                reports.push_back({combo_name(kind, wrap), spec, std::move(report)});
            }
        }
    } else {
        const LearnerKind kind = parse_learner(args.learner);
        const EnsembleWrap wrap = parse_ensemble(args.ensemble);
        PipelineSpec spec = make_spec(args, kind, wrap);
        EvalReport report = cross_validate(spec, ds, args.k_folds, args.seed, mode);
        reports.push_back({combo_name(kind, wrap), spec, std::move(report)});
    }

    std::string doc;
    if (reports.size() == 1)
        doc = report_to_json(reports.front().report, mode, args.seed, reports.front().spec,
                             args.k_folds);
    else
        doc = reports_to_json(reports, mode, args.seed, args.k_folds);
    if (!args.out_path.empty()) atomic_write(args.out_path, doc);
    if (!args.summary_csv_path.empty())
        atomic_write(args.summary_csv_path, format_summary_csv(reports));

    std::cout << format_table(reports);
    return 0;
}

struct HistogramArgs {
    std::string dataset_path, out_path;
    std::size_t bins = 10;
};

int cmd_histogram(const HistogramArgs& args) {
    auto in = open_input(args.dataset_path);
    const Dataset ds = read_dataset(in);
    const auto hist = feature_histograms(ds, args.bins);
    std::ostringstream out;
    write_histograms(out, ds, hist);
    atomic_write(args.out_path, out.str());
    std::cout << "rows: " << ds.rows.size() << ", features: " << kNumFeatures
              << ", bins: " << args.bins << "\n";
    return 0;
}

struct SmoteArgs {
    std::string dataset_path, out_path;
    std::size_t k = 5;
    std::size_t target_count = 0;
    double target_percent = 0.0;
    std::uint64_t seed = 1;
};

int cmd_smote(const SmoteArgs& args) {
    auto in = open_input(args.dataset_path);
    const Dataset ds = read_dataset(in);
    SmoteParams params;
    params.k_neighbors = args.k;
    if (args.target_count > 0) params.target_count = args.target_count;
    if (args.target_percent > 0.0) params.target_percent = args.target_percent;
    const Dataset balanced = balance(ds, params, args.seed);
    std::ostringstream out;
    write_dataset(out, balanced);
    atomic_write(args.out_path, out.str());
    std::cout << "rows: " << ds.rows.size() << " -> " << balanced.rows.size() << " ("
              << balanced.rows.size() - ds.rows.size() << " synthetic)\n";
    return 0;
}

// Flat key=value config for the run subcommand. Keys match the long option
// names without the leading dashes. Applied before parsing, so command-line
// flags override config values.
void apply_run_config(const std::string& path, RunArgs& args) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open config '" + path + "'");
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DataError("config '" + path + "' line " + std::to_string(line_no) +
                            ": expected key=value");
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "dataset") args.dataset_path = value;
            else if (key == "out") args.out_path = value;
            else if (key == "summary-csv") args.summary_csv_path = value;
            else if (key == "learner") args.learner = value;
            else if (key == "ensemble") args.ensemble = value;
            else if (key == "mode") args.mode = value;
            else if (key == "iterations") args.iterations = std::stoul(value);
            else if (key == "k-folds") args.k_folds = std::stoul(value);
            else if (key == "seed") args.seed = std::stoull(value);
            else if (key == "threads") args.threads = std::stoul(value);
            else if (key == "no-smote") args.no_smote = value == "true" || value == "1";
            else if (key == "smote-k") args.smote_k = std::stoul(value);
            else if (key == "smote-target-count") args.smote_target_count = std::stoul(value);
            else if (key == "smote-target-percent") args.smote_target_percent = std::stod(value);
            else if (key == "min-leaf") args.min_leaf = std::stoul(value);
            else if (key == "max-depth") args.max_depth = std::stoul(value);
            else if (key == "trees") args.n_trees = std::stoul(value);
            else if (key == "features-per-split") args.features_per_split = std::stoul(value);
            else if (key == "no-bootstrap") args.no_bootstrap = value == "true" || value == "1";
            else if (key == "all-combos") args.all_combos = value == "true" || value == "1";
            else
                throw DataError("config '" + path + "' line " + std::to_string(line_no) +
                                ": unknown key '" + key + "'");
        } catch (const std::invalid_argument&) {
            throw DataError("config '" + path + "' line " + std::to_string(line_no) +
                            ": bad value for '" + key + "'");
        }
    }
}

struct PredictArgs {
    std::string model_path, dataset_path, out_path;
};

int cmd_predict(const PredictArgs& args) {
    const Model model = load_model(args.model_path);
    auto in = open_input(args.dataset_path);
    const Dataset ds = read_dataset(in);

    std::ostringstream out;
    out << "location_id,predicted";
    for (const auto& label : model.class_set) out << ",share_" << label.str();
    out << '\n';
    std::size_t correct = 0;
    for (const auto& row : ds.rows) {
        const auto pred = predict(model, row.features);
        if (model.class_set[pred.class_index] == ds.class_set[row.label]) ++correct;
        out << row.location_id << ',' << model.class_set[pred.class_index].str();
        for (double share : pred.distribution) out << ',' << share;
        out << '\n';
    }
    atomic_write(args.out_path, out.str());
    std::cout << "predicted " << ds.rows.size() << " rows, " << correct
              << " match the dataset labels\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Predicts aesthetic-rating classes of locations from geo-tagged photo metadata"};
    app.require_subcommand(1);

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand(
        "ingest", "Join photos to locations and write the feature dataset CSV");
    ingest->add_option("--photos", ingest_args.photos_path, "Photo metadata CSV")->required();
    ingest->add_option("--locations", ingest_args.locations_path, "Location CSV")->required();
    ingest->add_option("--out", ingest_args.out_path, "Output dataset CSV")->required();
    ingest->add_option("--radius", ingest_args.radius_m, "Join radius in meters")
        ->default_val(100.0)
        ->check(CLI::PositiveNumber);
    ingest->add_flag("--drop-empty", ingest_args.drop_empty,
                     "Drop locations with no photos instead of keeping all-zero rows");

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Cross-validate a pipeline and write the report");
    std::string run_config_path;
    run->add_option("--config", run_config_path,
                    "Flat key=value config file; flags override it");
    run->add_option("--dataset", run_args.dataset_path, "Dataset CSV")->required();
    run->add_option("--out", run_args.out_path, "Report JSON path");
    run->add_option("--summary-csv", run_args.summary_csv_path, "Summary CSV path");
    run->add_option("--learner", run_args.learner, "Base learner")
        ->default_val("rf")
        ->check(CLI::IsMember({"j48", "reptree", "rf"}));
    run->add_option("--ensemble", run_args.ensemble, "Ensemble wrapper")
        ->default_val("none")
        ->check(CLI::IsMember({"none", "bagging", "boosting"}));
    run->add_option("--iterations", run_args.iterations, "Ensemble iterations")
        ->default_val(10)
        ->check(CLI::PositiveNumber);
    run->add_option("--k-folds", run_args.k_folds, "Cross-validation folds")
        ->default_val(10)
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    run->add_option("--mode", run_args.mode, "SMOTE placement relative to the folds")
        ->default_val("leakage_safe")
        ->check(CLI::IsMember({"paper_faithful", "leakage_safe"}));
    run->add_option("--seed", run_args.seed, "RNG seed")->default_val(1);
    run->add_option("--threads", run_args.threads, "Worker threads (never changes results)")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    run->add_flag("--no-smote", run_args.no_smote, "Skip class balancing");
    run->add_option("--smote-k", run_args.smote_k, "SMOTE neighbor count")
        ->default_val(5)
        ->check(CLI::PositiveNumber);
    run->add_option("--smote-target-count", run_args.smote_target_count,
                    "Per-class target size (0 = majority-class count)")
        ->default_val(0);
    run->add_option("--smote-target-percent", run_args.smote_target_percent,
                    "Per-class target as percent of current size (0 = unused)")
        ->default_val(0.0);
    run->add_option("--min-leaf", run_args.min_leaf, "Minimum rows per leaf (0 = learner default)")
        ->default_val(0);
    run->add_option("--max-depth", run_args.max_depth, "Maximum tree depth (0 = unlimited)")
        ->default_val(0);
    run->add_option("--trees", run_args.n_trees, "Trees per random forest")
        ->default_val(100)
        ->check(CLI::PositiveNumber);
    run->add_option("--features-per-split", run_args.features_per_split,
                    "Features sampled at each forest node")
        ->default_val(4)
        ->check(CLI::Range(std::size_t{1}, kNumFeatures));
    run->add_flag("--no-bootstrap", run_args.no_bootstrap, "Disable forest bootstrap resampling");
    run->add_flag("--all-combos", run_args.all_combos,
                  "Evaluate all six bagging/boosting x learner combinations");

    HistogramArgs hist_args;
    auto* histogram =
        app.add_subcommand("histogram", "Write per-feature, per-class histogram CSV");
    histogram->add_option("--dataset", hist_args.dataset_path, "Dataset CSV")->required();
    histogram->add_option("--out", hist_args.out_path, "Output histogram CSV")->required();
    histogram->add_option("--bins", hist_args.bins, "Number of equal-width bins")
        ->default_val(10)
        ->check(CLI::PositiveNumber);

    SmoteArgs smote_args;
    auto* smote = app.add_subcommand("smote", "Balance a dataset file with SMOTE");
    smote->add_option("--dataset", smote_args.dataset_path, "Dataset CSV")->required();
    smote->add_option("--out", smote_args.out_path, "Balanced dataset CSV")->required();
    smote->add_option("--k", smote_args.k, "Neighbor count")
        ->default_val(5)
        ->check(CLI::PositiveNumber);
    smote->add_option("--target-count", smote_args.target_count,
                      "Per-class target size (0 = majority-class count)")
        ->default_val(0);
    smote->add_option("--target-percent", smote_args.target_percent,
                      "Per-class target as percent of current size (0 = unused)")
        ->default_val(0.0);
    smote->add_option("--seed", smote_args.seed, "RNG seed")->default_val(1);

    PredictArgs predict_args;
    auto* predict = app.add_subcommand("predict", "Apply a serialized model to a dataset");
    predict->add_option("--model", predict_args.model_path, "Model JSON")->required();
    predict->add_option("--dataset", predict_args.dataset_path, "Dataset CSV")->required();
    predict->add_option("--out", predict_args.out_path, "Predictions CSV")->required();

    // config values must land before the flags are parsed over them
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        std::string path;
        if (arg == "--config" && i + 1 < argc)
            path = argv[i + 1];
        else if (arg.rfind("--config=", 0) == 0)
            path = arg.substr(9);
        if (!path.empty()) {
            try {
                apply_run_config(path, run_args);
            } catch (const DataError& e) {
                std::cerr << "data error: " << e.what() << "\n";
                return 2;
            }
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*ingest) return cmd_ingest(ingest_args);
        if (*run) return cmd_run(run_args);
        if (*histogram) return cmd_histogram(hist_args);
        if (*smote) return cmd_smote(smote_args);
        if (*predict) return cmd_predict(predict_args);
        return 1;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
