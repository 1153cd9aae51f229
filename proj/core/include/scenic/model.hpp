#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "scenic/geo.hpp"

namespace scenic {

enum class Criterion { info_gain, gain_ratio };
enum class Pruning { none, pessimistic, reduced_error };

struct TreeParams {
    Criterion criterion = Criterion::gain_ratio;
    std::size_t min_leaf = 2;
    std::size_t max_depth = 0;  // 0 = unlimited
    Pruning pruning = Pruning::none;
    double confidence = 0.25;          // pessimistic pruning CF
    double holdout_fraction = 1.0 / 3.0;  // reduced-error holdout share
};

// J48-analog: gain ratio + pessimistic pruning (CF 0.25).
inline TreeParams j48_params() {
    return {Criterion::gain_ratio, 2, 0, Pruning::pessimistic, 0.25, 1.0 / 3.0};
}

// REPTree-analog: info gain + reduced-error pruning on a 1/3 holdout.
inline TreeParams reptree_params() {
    return {Criterion::info_gain, 2, 0, Pruning::reduced_error, 0.25, 1.0 / 3.0};
}

struct ForestParams {
    std::size_t n_trees = 100;
    std::size_t features_per_split = 4;  // ceil(log2(11) + 1)
    bool bootstrap = true;
};

struct TreeNode {
    struct Split {
        std::size_t feature = 0;
        double threshold = 0.0;  // <= goes left
        std::unique_ptr<TreeNode> left, right;
    };
    struct Leaf {
        std::vector<double> class_counts;
        std::size_t predicted = 0;  // argmax, ties toward the lower rating
    };
    std::variant<Split, Leaf> node;

    // defined out of line: the variant's special members need a complete type
    TreeNode();
    TreeNode(TreeNode&&) noexcept;
    TreeNode& operator=(TreeNode&&) noexcept;
    ~TreeNode();

    bool is_leaf() const { return std::holds_alternative<Leaf>(node); }
    std::size_t size() const;  // node count including this one
};

struct Model;
using ModelPtr = std::shared_ptr<const Model>;

struct TreeModel {
    TreeParams params;
    std::uint64_t seed = 0;
    std::shared_ptr<const TreeNode> root;
};

enum class EnsembleKind { bagging, boosting, forest };

struct EnsembleModel {
    EnsembleKind kind = EnsembleKind::bagging;
    std::uint64_t seed = 0;
    std::vector<std::pair<ModelPtr, double>> members;  // (model, weight)
};

struct Model {
    std::vector<ClassLabel> class_set;  // ascending; prediction indices refer here
    std::variant<TreeModel, EnsembleModel> value;
};

struct Prediction {
    std::size_t class_index = 0;
    std::vector<double> distribution;  // sums to 1, indexed like class_set
};

// Routes by thresholds for trees; (weighted) majority vote for ensembles,
// with vote shares as the distribution. Ties go to the lower rating.
Prediction predict(const Model& model, std::span<const double> features);

}  // namespace scenic
