#pragma once

#include <optional>
#include <span>

#include "scenic/dataset.hpp"
#include "scenic/model.hpp"
#include "scenic/rng.hpp"

namespace scenic {

// Shannon entropy in bits; counts must be non-negative and not all zero.
double entropy(std::span<const double> class_counts);

struct SplitCandidate {
    double threshold = 0.0;
    double score = 0.0;  // info gain, or gain ratio per criterion
};

// Best binary split of `indices` on one feature: every midpoint between
// consecutive distinct sorted values is scored; nullopt when the feature
// is constant or no candidate scores positive. For gain_ratio the usual
// guard applies: only candidates with gain >= the mean candidate gain
// compete on gain ratio. Ties resolve toward the lower threshold.
std::optional<SplitCandidate> best_split(const Dataset& ds,
                                         std::span<const std::size_t> indices,
                                         std::size_t feature, Criterion criterion);

// Greedy top-down induction with midpoint thresholds. Stops on purity,
// min_leaf, max_depth, or no positive-scoring split; prunes per params.
Model train_tree(const Dataset& ds, const TreeParams& params, std::uint64_t seed);

// Random forest: n_trees unpruned trees on bootstrap resamples with
// per-node feature subsampling; majority vote. Per-tree seeds derive from
// `seed` and the tree index, so results do not depend on thread count.
Model train_forest(const Dataset& ds, const ForestParams& params,
                   const TreeParams& tree_params, std::uint64_t seed,
                   std::size_t threads = 1);

}  // namespace scenic
