#include "scenic/model_io.hpp"

#include <fstream>
#include <json.hpp>

#include "scenic/error.hpp"

namespace scenic {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json node_to_json(const TreeNode& node) {
    if (node.is_leaf()) {
        const auto& leaf = std::get<TreeNode::Leaf>(node.node);
        return {{"counts", leaf.class_counts}, {"predicted", leaf.predicted}};
    }
    const auto& split = std::get<TreeNode::Split>(node.node);
    return {{"feature", split.feature},
            {"threshold", split.threshold},
            {"left", node_to_json(*split.left)},
            {"right", node_to_json(*split.right)}};
}

std::unique_ptr<TreeNode> node_from_json(const json& j) {
    auto node = std::make_unique<TreeNode>();
    if (j.contains("counts")) {
        TreeNode::Leaf leaf;
        leaf.class_counts = j.at("counts").get<std::vector<double>>();
        leaf.predicted = j.at("predicted").get<std::size_t>();
        node->node = std::move(leaf);
    } else {
        TreeNode::Split split;
        split.feature = j.at("feature").get<std::size_t>();
        split.threshold = j.at("threshold").get<double>();
        split.left = node_from_json(j.at("left"));
        split.right = node_from_json(j.at("right"));
        node->node = std::move(split);
    }
    return node;
}

const char* criterion_name(Criterion c) {
    return c == Criterion::gain_ratio ? "gain_ratio" : "info_gain";
}

const char* pruning_name(Pruning p) {
    switch (p) {
        case Pruning::pessimistic: return "pessimistic";
        case Pruning::reduced_error: return "reduced_error";
        default: return "none";
    }
}

const char* kind_name(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::bagging: return "bagging";
        case EnsembleKind::boosting: return "boosting";
        default: return "forest";
    }
}

json value_to_json(const Model& model);

json tree_to_json(const TreeModel& tree) {
    return {{"type", "tree"},
            {"criterion", criterion_name(tree.params.criterion)},
            {"min_leaf", tree.params.min_leaf},
            {"max_depth", tree.params.max_depth},
            {"pruning", pruning_name(tree.params.pruning)},
            {"confidence", tree.params.confidence},
            {"holdout_fraction", tree.params.holdout_fraction},
            {"seed", tree.seed},
            {"root", node_to_json(*tree.root)}};
}

json ensemble_to_json(const EnsembleModel& ensemble) {
    json members = json::array();
    for (const auto& [member, weight] : ensemble.members)
        members.push_back({{"weight", weight}, {"model", value_to_json(*member)}});
    return {{"type", "ensemble"},
            {"kind", kind_name(ensemble.kind)},
            {"seed", ensemble.seed},
            {"members", std::move(members)}};
}

json value_to_json(const Model& model) {
    if (const auto* tree = std::get_if<TreeModel>(&model.value)) return tree_to_json(*tree);
    return ensemble_to_json(std::get<EnsembleModel>(model.value));
}

Model value_from_json(const json& j, const std::vector<ClassLabel>& class_set);

TreeModel tree_from_json(const json& j) {
    TreeModel tree;
    const auto crit = j.at("criterion").get<std::string>();
    tree.params.criterion = crit == "gain_ratio" ? Criterion::gain_ratio : Criterion::info_gain;
    tree.params.min_leaf = j.at("min_leaf").get<std::size_t>();
    tree.params.max_depth = j.at("max_depth").get<std::size_t>();
    const auto prune = j.at("pruning").get<std::string>();
    tree.params.pruning = prune == "pessimistic"     ? Pruning::pessimistic
                          : prune == "reduced_error" ? Pruning::reduced_error
                                                     : Pruning::none;
    tree.params.confidence = j.at("confidence").get<double>();
    tree.params.holdout_fraction = j.at("holdout_fraction").get<double>();
    tree.seed = j.at("seed").get<std::uint64_t>();
    tree.root = node_from_json(j.at("root"));
    return tree;
}

Model value_from_json(const json& j, const std::vector<ClassLabel>& class_set) {
    Model model;
    model.class_set = class_set;
    const auto type = j.at("type").get<std::string>();
    if (type == "tree") {
        model.value = tree_from_json(j);
        return model;
    }
    if (type != "ensemble") throw DataError("unknown model type '" + type + "'");
    EnsembleModel ensemble;
    const auto kind = j.at("kind").get<std::string>();
    ensemble.kind = kind == "bagging"    ? EnsembleKind::bagging
                    : kind == "boosting" ? EnsembleKind::boosting
                                         : EnsembleKind::forest;
    ensemble.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& m : j.at("members")) {
        ensemble.members.emplace_back(
            std::make_shared<Model>(value_from_json(m.at("model"), class_set)),
            m.at("weight").get<double>());
    }
    model.value = std::move(ensemble);
    return model;
}

}  // namespace

std::string model_to_json(const Model& model) {
    json classes = json::array();
    for (const auto& label : model.class_set) classes.push_back(label.str());
    json doc = {{"format", "scenic-model"},
                {"version", kFormatVersion},
                {"classes", std::move(classes)},
                {"model", value_to_json(model)}};
    return doc.dump(2);
}

Model model_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw DataError(std::string("invalid model JSON: ") + e.what());
    }
    try {
        if (doc.at("format").get<std::string>() != "scenic-model")
            throw DataError("not a scenic model file");
        if (doc.at("version").get<int>() != kFormatVersion)
            throw DataError("unsupported model format version");
        std::vector<ClassLabel> class_set;
        for (const auto& c : doc.at("classes"))
            class_set.push_back(ClassLabel::from_string(c.get<std::string>()));
        return value_from_json(doc.at("model"), class_set);
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed model document: ") + e.what());
    }
}

void save_model(const std::string& path, const Model& model) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open '" + path + "' for writing");
    out << model_to_json(model) << '\n';
    if (!out) throw DataError("failed writing model to '" + path + "'");
}

Model load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return model_from_json(text);
}

}  // namespace scenic
