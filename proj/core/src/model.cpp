#include "scenic/model.hpp"

#include <numeric>

#include "scenic/dataset.hpp"
#include "scenic/error.hpp"

namespace scenic {

TreeNode::TreeNode() : node(Leaf{}) {}
TreeNode::TreeNode(TreeNode&&) noexcept = default;
TreeNode& TreeNode::operator=(TreeNode&&) noexcept = default;
TreeNode::~TreeNode() = default;

std::size_t TreeNode::size() const {
    if (is_leaf()) return 1;
    const auto& split = std::get<Split>(node);
    return 1 + split.left->size() + split.right->size();
}

namespace {

const TreeNode::Leaf& route_to_leaf(const TreeNode& node, std::span<const double> features) {
    const TreeNode* cur = &node;
    while (!cur->is_leaf()) {
        const auto& split = std::get<TreeNode::Split>(cur->node);
        cur = features[split.feature] <= split.threshold ? split.left.get()
                                                         : split.right.get();
    }
    return std::get<TreeNode::Leaf>(cur->node);
}

Prediction normalize(std::vector<double> scores) {
    Prediction p;
    const double total = std::accumulate(scores.begin(), scores.end(), 0.0);
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i)
        if (scores[i] > scores[best]) best = i;  // ties toward the lower rating
    p.class_index = best;
    if (total > 0.0)
        for (double& s : scores) s /= total;
    p.distribution = std::move(scores);
    return p;
}

}  // namespace

Prediction predict(const Model& model, std::span<const double> features) {
    if (features.size() != kNumFeatures)
        throw DataError("predict: expected " + std::to_string(kNumFeatures) +
                        " features, got " + std::to_string(features.size()));

    if (const auto* tree = std::get_if<TreeModel>(&model.value)) {
        const auto& leaf = route_to_leaf(*tree->root, features);
        return normalize(leaf.class_counts);
    }

    const auto& ensemble = std::get<EnsembleModel>(model.value);
    std::vector<double> votes(model.class_set.size(), 0.0);
    for (const auto& [member, weight] : ensemble.members)
        votes[predict(*member, features).class_index] += weight;
    return normalize(std::move(votes));
}

}  // namespace scenic
