#include "scenic/tree.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "scenic/error.hpp"

namespace scenic {

namespace {

constexpr double kEps = 1e-12;

std::vector<double> label_counts(const Dataset& ds, std::span<const std::size_t> indices) {
    std::vector<double> counts(ds.n_classes(), 0.0);
    for (std::size_t i : indices) counts[ds.rows[i].label] += 1.0;
    return counts;
}

std::size_t argmax_low_tie(std::span<const double> counts) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < counts.size(); ++i)
        if (counts[i] > counts[best]) best = i;
    return best;
}

TreeNode::Leaf make_leaf(std::vector<double> counts) {
    std::size_t predicted = argmax_low_tie(counts);
    return {std::move(counts), predicted};
}

bool is_pure(std::span<const double> counts) {
    int nonzero = 0;
    for (double c : counts)
        if (c > 0.0) ++nonzero;
    return nonzero <= 1;
}

// Acklam's rational approximation to the standard normal quantile.
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double p_low = 0.02425;
    double q, r;
    if (p < p_low) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        q = p - 0.5;
        r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

// C4.5 pessimistic upper bound on the error count of a leaf with E of N wrong.
double pessimistic_errors(double errors, double n, double z) {
    if (n <= 0.0) return 0.0;
    const double f = errors / n;
    const double z2 = z * z;
    const double upper =
        (f + z2 / (2.0 * n) + z * std::sqrt(f / n - f * f / n + z2 / (4.0 * n * n))) /
        (1.0 + z2 / n);
    return upper * n;
}

std::optional<SplitCandidate> best_split_impl(const Dataset& ds,
                                              std::span<const std::size_t> indices,
                                              std::size_t feature, Criterion criterion,
                                              std::size_t min_count) {
    const std::size_t n = indices.size();
    if (n < 2) return std::nullopt;

    std::vector<std::pair<double, std::size_t>> sorted;  // (value, class)
    sorted.reserve(n);
    for (std::size_t i : indices)
        sorted.emplace_back(ds.rows[i].features[feature], ds.rows[i].label);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (sorted.front().first == sorted.back().first) return std::nullopt;  // constant

    std::vector<double> total(ds.n_classes(), 0.0);
    for (const auto& [v, c] : sorted) total[c] += 1.0;
    const double h_total = entropy(total);
    const double dn = static_cast<double>(n);

    struct Candidate {
        double threshold, gain, split_info;
    };
    std::vector<Candidate> candidates;
    std::vector<double> left(ds.n_classes(), 0.0);
    for (std::size_t i = 1; i < n; ++i) {
        left[sorted[i - 1].second] += 1.0;
        if (sorted[i].first <= sorted[i - 1].first) continue;
        if (i < min_count || n - i < min_count) continue;
        std::vector<double> right(ds.n_classes());
        for (std::size_t c = 0; c < right.size(); ++c) right[c] = total[c] - left[c];
        const double pl = static_cast<double>(i) / dn;
        const double pr = 1.0 - pl;
        const double gain = h_total - pl * entropy(left) - pr * entropy(right);
        const double split_info = -pl * std::log2(pl) - pr * std::log2(pr);
        candidates.push_back(
            {(sorted[i - 1].first + sorted[i].first) / 2.0, gain, split_info});
    }
    if (candidates.empty()) return std::nullopt;

    if (criterion == Criterion::info_gain) {
        const Candidate* best = &candidates.front();
        for (const auto& c : candidates)
            if (c.gain > best->gain) best = &c;  // ties keep the lower threshold
        return SplitCandidate{best->threshold, best->gain};
    }

    // gain ratio: only candidates with at least average gain compete
    double mean_gain = 0.0;
    for (const auto& c : candidates) mean_gain += c.gain;
    mean_gain /= static_cast<double>(candidates.size());
    const Candidate* best = nullptr;
    double best_ratio = 0.0;
    for (const auto& c : candidates) {
        if (c.gain + kEps < mean_gain) continue;
        const double ratio = c.split_info > 0.0 ? c.gain / c.split_info : 0.0;
        if (!best || ratio > best_ratio) {
            best = &c;
            best_ratio = ratio;
        }
    }
    return SplitCandidate{best->threshold, best_ratio};
}

struct Inducer {
    const Dataset& ds;
    const TreeParams& params;
    std::size_t features_per_split;  // 0 = consider all features
    Rng* rng = nullptr;              // required when subsampling features

    std::unique_ptr<TreeNode> build(std::vector<std::size_t>& indices, std::size_t depth) {
        auto counts = label_counts(ds, indices);
        auto node = std::make_unique<TreeNode>();
        if (is_pure(counts) || indices.size() < 2 * std::max<std::size_t>(params.min_leaf, 1) ||
            (params.max_depth != 0 && depth >= params.max_depth)) {
            node->node = make_leaf(std::move(counts));
            return node;
        }

        std::vector<std::size_t> features(kNumFeatures);
        std::iota(features.begin(), features.end(), 0);
        if (features_per_split != 0 && features_per_split < kNumFeatures) {
            for (std::size_t i = 0; i < features_per_split; ++i)
                std::swap(features[i], features[i + rng->below(features.size() - i)]);
            features.resize(features_per_split);
            std::sort(features.begin(), features.end());  // low feature wins score ties
        }

        std::optional<std::size_t> best_feature;
        SplitCandidate best{};
        for (std::size_t f : features) {
            auto cand = best_split_impl(ds, indices, f, params.criterion,
                                        std::max<std::size_t>(params.min_leaf, 1));
            if (!cand) continue;
            if (!best_feature || cand->score > best.score) {  // ties keep the lower feature
                best_feature = f;
                best = *cand;
            }
        }
        if (!best_feature || best.score <= 0.0) {
            node->node = make_leaf(std::move(counts));
            return node;
        }

        std::vector<std::size_t> left_idx, right_idx;
        for (std::size_t i : indices) {
            if (ds.rows[i].features[*best_feature] <= best.threshold)
                left_idx.push_back(i);
            else
                right_idx.push_back(i);
        }
        TreeNode::Split split;
        split.feature = *best_feature;
        split.threshold = best.threshold;
        split.left = build(left_idx, depth + 1);
        split.right = build(right_idx, depth + 1);
        node->node = std::move(split);
        return node;
    }
};

void route(const Dataset& ds, const TreeNode::Split& split,
           std::span<const std::size_t> indices, std::vector<std::size_t>& left,
           std::vector<std::size_t>& right) {
    for (std::size_t i : indices) {
        if (ds.rows[i].features[split.feature] <= split.threshold)
            left.push_back(i);
        else
            right.push_back(i);
    }
}

// Bottom-up subtree replacement by the C4.5 pessimistic error estimate.
// Returns the estimated error count of the (possibly pruned) subtree.
double prune_pessimistic(std::unique_ptr<TreeNode>& node, const Dataset& ds,
                         std::span<const std::size_t> indices, double z) {
    auto counts = label_counts(ds, indices);
    const double n = std::accumulate(counts.begin(), counts.end(), 0.0);
    const double leaf_errors = n - counts[argmax_low_tie(counts)];
    const double leaf_estimate = pessimistic_errors(leaf_errors, n, z);
    if (node->is_leaf()) return leaf_estimate;

    auto& split = std::get<TreeNode::Split>(node->node);
    std::vector<std::size_t> left_idx, right_idx;
    route(ds, split, indices, left_idx, right_idx);
    const double subtree_estimate = prune_pessimistic(split.left, ds, left_idx, z) +
                                    prune_pessimistic(split.right, ds, right_idx, z);
    if (leaf_estimate <= subtree_estimate + 1e-9) {
        node->node = make_leaf(std::move(counts));
        return leaf_estimate;
    }
    return subtree_estimate;
}

// Bottom-up reduced-error pruning against a holdout set. Returns the
// holdout error count of the (possibly pruned) subtree.
std::size_t prune_reduced_error(std::unique_ptr<TreeNode>& node, const Dataset& ds,
                                std::span<const std::size_t> grow,
                                std::span<const std::size_t> holdout) {
    auto counts = label_counts(ds, grow);
    const std::size_t leaf_pred = argmax_low_tie(counts);
    std::size_t leaf_errors = 0;
    for (std::size_t i : holdout)
        if (ds.rows[i].label != leaf_pred) ++leaf_errors;
    if (node->is_leaf()) return leaf_errors;

    auto& split = std::get<TreeNode::Split>(node->node);
    std::vector<std::size_t> grow_l, grow_r, hold_l, hold_r;
    route(ds, split, grow, grow_l, grow_r);
    route(ds, split, holdout, hold_l, hold_r);
    const std::size_t subtree_errors = prune_reduced_error(split.left, ds, grow_l, hold_l) +
                                       prune_reduced_error(split.right, ds, grow_r, hold_r);
    if (leaf_errors <= subtree_errors) {
        node->node = make_leaf(std::move(counts));
        return leaf_errors;
    }
    return subtree_errors;
}

// Seeded stratified grow/holdout partition for reduced-error pruning.
void stratified_holdout(const Dataset& ds, double fraction, Rng& rng,
                        std::vector<std::size_t>& grow, std::vector<std::size_t>& holdout) {
    std::vector<std::vector<std::size_t>> per_class(ds.n_classes());
    for (std::size_t i = 0; i < ds.rows.size(); ++i)
        per_class[ds.rows[i].label].push_back(i);
    for (auto& idx : per_class) {
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[rng.below(i)]);
        const std::size_t n_hold =
            static_cast<std::size_t>(static_cast<double>(idx.size()) * fraction);
        for (std::size_t i = 0; i < idx.size(); ++i)
            (i < n_hold ? holdout : grow).push_back(idx[i]);
    }
    std::sort(grow.begin(), grow.end());
    std::sort(holdout.begin(), holdout.end());
}

}  // namespace

double entropy(std::span<const double> class_counts) {
    double total = 0.0;
    for (double c : class_counts) {
        if (c < 0.0) throw DataError("entropy: negative class count");
        total += c;
    }
    if (total <= 0.0) throw DataError("entropy: all class counts are zero");
    double h = 0.0;
    for (double c : class_counts) {
        if (c <= 0.0) continue;
        const double p = c / total;
        h -= p * std::log2(p);
    }
    return h;
}

std::optional<SplitCandidate> best_split(const Dataset& ds,
                                         std::span<const std::size_t> indices,
                                         std::size_t feature, Criterion criterion) {
    return best_split_impl(ds, indices, feature, criterion, 1);
}

Model train_tree(const Dataset& ds, const TreeParams& params, std::uint64_t seed) {
    if (ds.rows.empty()) throw DataError("cannot train a tree on an empty dataset");
    Rng rng = Rng::substream(seed, 0x7265'65);

    std::vector<std::size_t> all(ds.rows.size());
    std::iota(all.begin(), all.end(), 0);

    Inducer inducer{ds, params, 0, &rng};
    std::unique_ptr<TreeNode> root;
    if (params.pruning == Pruning::reduced_error) {
        std::vector<std::size_t> grow, holdout;
        stratified_holdout(ds, params.holdout_fraction, rng, grow, holdout);
        if (grow.empty()) grow = all;  // degenerate tiny datasets: skip the holdout
        root = inducer.build(grow, 0);
        if (!holdout.empty()) prune_reduced_error(root, ds, grow, holdout);
    } else {
        root = inducer.build(all, 0);
        if (params.pruning == Pruning::pessimistic)
            prune_pessimistic(root, ds, all, normal_quantile(1.0 - params.confidence));
    }

    Model model;
    model.class_set = ds.class_set;
    model.value = TreeModel{params, seed, std::shared_ptr<const TreeNode>(std::move(root))};
    return model;
}

Model train_forest(const Dataset& ds, const ForestParams& params,
                   const TreeParams& tree_params, std::uint64_t seed, std::size_t threads) {
    if (ds.rows.empty()) throw DataError("cannot train a forest on an empty dataset");
    if (params.n_trees == 0) throw DataError("forest needs n_trees >= 1");
    const std::size_t fps = std::clamp<std::size_t>(params.features_per_split, 1, kNumFeatures);

    std::vector<ModelPtr> trees(params.n_trees);
    auto train_one = [&](std::size_t t) {
        Rng rng = Rng::substream(seed, t);
        std::vector<std::size_t> sample;
        if (params.bootstrap) {
            sample.resize(ds.rows.size());
            for (auto& s : sample) s = rng.below(ds.rows.size());
        } else {
            sample.resize(ds.rows.size());
            std::iota(sample.begin(), sample.end(), 0);
        }
        Inducer inducer{ds, tree_params, fps == kNumFeatures ? 0 : fps, &rng};
        auto root = inducer.build(sample, 0);
        auto model = std::make_shared<Model>();
        model->class_set = ds.class_set;
        model->value =
            TreeModel{tree_params, seed, std::shared_ptr<const TreeNode>(std::move(root))};
        trees[t] = std::move(model);
    };

    if (threads <= 1) {
        for (std::size_t t = 0; t < params.n_trees; ++t) train_one(t);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        for (std::size_t w = 0; w < std::min(threads, params.n_trees); ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < params.n_trees; t = next++) train_one(t);
            });
        }
        for (auto& th : pool) th.join();
    }

    EnsembleModel forest;
    forest.kind = EnsembleKind::forest;
    forest.seed = seed;
    for (auto& tree : trees) forest.members.emplace_back(std::move(tree), 1.0);

    Model model;
    model.class_set = ds.class_set;
    model.value = std::move(forest);
    return model;
}

}  // namespace scenic
