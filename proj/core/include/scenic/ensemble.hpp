#pragma once

#include "scenic/dataset.hpp"
#include "scenic/model.hpp"

namespace scenic {

enum class LearnerKind { j48, reptree, rf };

struct LearnerSpec {
    LearnerKind kind = LearnerKind::j48;
    TreeParams tree;      // j48/reptree, and the trees inside rf
    ForestParams forest;  // rf only
    std::size_t threads = 1;
};

LearnerSpec make_learner(LearnerKind kind);

Model train_learner(const LearnerSpec& spec, const Dataset& ds, std::uint64_t seed);

// Bootstrap aggregating: `iterations` members, each trained on a seeded
// resample of |ds| rows drawn with replacement; unweighted majority vote.
// resample=false is a test hook that trains every member on ds verbatim.
Model bag(const LearnerSpec& base, const Dataset& ds, std::size_t iterations,
          std::uint64_t seed, bool resample = true);

struct BoostRound {
    double error = 0.0;             // weighted error on the full training set
    double member_weight = 0.0;     // ln((1-e)/e); 0 for discarded rounds
    double weight_sum_after = 0.0;  // row-weight total after renormalization
    bool kept = false;
};

// AdaBoost.M1 with weighted resampling. Row weights start uniform; each
// round trains on a weight-proportional resample, takes weighted error e
// on the full training set, and either discards the round (e >= 1/2,
// weights reset, bounded retries), stops early with a capped weight
// (e = 0), or keeps the member with weight ln((1-e)/e) and scales
// misclassified rows up by (1-e)/e before renormalizing.
Model boost(const LearnerSpec& base, const Dataset& ds, std::size_t iterations,
            std::uint64_t seed, std::vector<BoostRound>* trace = nullptr);

}  // namespace scenic
