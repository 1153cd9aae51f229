#include "scenic/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "scenic/error.hpp"
#include "scenic/rng.hpp"
#include "scenic/tree.hpp"

namespace scenic {

namespace {

Dataset resample_rows(const Dataset& ds, const std::vector<std::size_t>& picks) {
    Dataset out;
    out.class_set = ds.class_set;
    out.rows.reserve(picks.size());
    for (std::size_t i : picks) out.rows.push_back(ds.rows[i]);
    return out;
}

Dataset bootstrap(const Dataset& ds, Rng& rng) {
    std::vector<std::size_t> picks(ds.rows.size());
    for (auto& p : picks) p = rng.below(ds.rows.size());
    return resample_rows(ds, picks);
}

// n draws with replacement, probability proportional to weights
Dataset weighted_resample(const Dataset& ds, const std::vector<double>& weights, Rng& rng) {
    std::vector<double> cumulative(weights.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        sum += weights[i];
        cumulative[i] = sum;
    }
    std::vector<std::size_t> picks(ds.rows.size());
    for (auto& p : picks) {
        const double u = rng.uniform() * sum;
        p = static_cast<std::size_t>(
            std::lower_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        p = std::min(p, weights.size() - 1);
    }
    return resample_rows(ds, picks);
}

}  // namespace

LearnerSpec make_learner(LearnerKind kind) {
    LearnerSpec spec;
    spec.kind = kind;
    switch (kind) {
        case LearnerKind::j48:
            spec.tree = j48_params();
            break;
        case LearnerKind::reptree:
            spec.tree = reptree_params();
            break;
        case LearnerKind::rf:
            spec.tree = TreeParams{Criterion::info_gain, 1, 0, Pruning::none, 0.25, 1.0 / 3.0};
            break;
    }
    return spec;
}

Model train_learner(const LearnerSpec& spec, const Dataset& ds, std::uint64_t seed) {
    if (spec.kind == LearnerKind::rf)
        return train_forest(ds, spec.forest, spec.tree, seed, spec.threads);
    return train_tree(ds, spec.tree, seed);
}

Model bag(const LearnerSpec& base, const Dataset& ds, std::size_t iterations,
          std::uint64_t seed, bool resample) {
    if (ds.rows.empty()) throw DataError("cannot bag on an empty dataset");
    if (iterations == 0) throw DataError("bagging needs iterations >= 1");

    EnsembleModel ensemble;
    ensemble.kind = EnsembleKind::bagging;
    ensemble.seed = seed;
    for (std::size_t t = 0; t < iterations; ++t) {
        Rng rng = Rng::substream(seed, t);
        const Dataset sample = resample ? bootstrap(ds, rng) : ds;
        auto member = std::make_shared<Model>(
            train_learner(base, sample, Rng::derive_seed(seed, t)));
        ensemble.members.emplace_back(std::move(member), 1.0);
    }

    Model model;
    model.class_set = ds.class_set;
    model.value = std::move(ensemble);
    return model;
}

Model boost(const LearnerSpec& base, const Dataset& ds, std::size_t iterations,
            std::uint64_t seed, std::vector<BoostRound>* trace) {
    if (ds.rows.empty()) throw DataError("cannot boost on an empty dataset");
    if (iterations == 0) throw DataError("boosting needs iterations >= 1");

    const std::size_t n = ds.rows.size();
    std::vector<double> weights(n, 1.0 / static_cast<double>(n));

    EnsembleModel ensemble;
    ensemble.kind = EnsembleKind::boosting;
    ensemble.seed = seed;

    std::size_t round = 0;
    std::size_t discards = 0;
    std::shared_ptr<Model> last_discarded;
    while (ensemble.members.size() < iterations) {
        Rng rng = Rng::substream(seed, round);
        const Dataset sample = weighted_resample(ds, weights, rng);
        Model member = train_learner(base, sample, Rng::derive_seed(seed, round));
        ++round;

        double error = 0.0;
        std::vector<bool> wrong(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (predict(member, ds.rows[i].features).class_index != ds.rows[i].label) {
                wrong[i] = true;
                error += weights[i];
            }
        }

        if (error >= 0.5) {
            // discard the round; bounded retries with fresh resamples
            last_discarded = std::make_shared<Model>(std::move(member));
            std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(n));
            if (trace) trace->push_back({error, 0.0, 1.0, false});
            if (++discards > iterations) break;
            continue;
        }
        if (error <= 0.0) {
            const double eps = 1.0 / (2.0 * static_cast<double>(n));
            const double capped = std::log((1.0 - eps) / eps);
            ensemble.members.emplace_back(std::make_shared<Model>(std::move(member)), capped);
            if (trace) trace->push_back({error, capped, 1.0, true});
            break;
        }

        const double member_weight = std::log((1.0 - error) / error);
        ensemble.members.emplace_back(std::make_shared<Model>(std::move(member)),
                                      member_weight);
        const double scale = (1.0 - error) / error;
        double total = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (wrong[i]) weights[i] *= scale;
            total += weights[i];
        }
        for (double& w : weights) w /= total;
        if (trace) {
            const double after = std::accumulate(weights.begin(), weights.end(), 0.0);
            trace->push_back({error, member_weight, after, true});
        }
    }

    // when every round was discarded, fall back to the last model so the
    // ensemble still predicts
    if (ensemble.members.empty()) ensemble.members.emplace_back(last_discarded, 1.0);

    Model model;
    model.class_set = ds.class_set;
    model.value = std::move(ensemble);
    return model;
}

}  // namespace scenic
