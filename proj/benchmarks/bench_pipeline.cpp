#include <benchmark/benchmark.h>

#include <vector>

#include "scenic/ensemble.hpp"
#include "scenic/features.hpp"
#include "scenic/geo.hpp"
#include "scenic/rng.hpp"
#include "scenic/smote.hpp"
#include "scenic/tree.hpp"

using namespace scenic;

namespace {

Dataset synthetic_dataset(std::size_t n, std::size_t n_classes, std::uint64_t seed) {
    Rng rng(seed);
    Dataset ds;
    for (std::size_t c = 0; c < n_classes; ++c)
        ds.class_set.push_back(ClassLabel::from_rating(2.5 + 0.5 * static_cast<double>(c)));
    for (std::size_t i = 0; i < n; ++i) {
        FeatureVector fv;
        fv.location_id = "r" + std::to_string(i);
        for (auto& f : fv.features) f = rng.uniform() * 10.0;
        fv.label = fv.features[1] > 5.0 ? rng.below(n_classes)
                                        : rng.below((n_classes + 1) / 2);
        ds.rows.push_back(fv);
    }
    return ds;
}

void bm_haversine_join(benchmark::State& state) {
    const std::size_t n_photos = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    std::vector<PhotoMeta> photos;
    for (std::size_t i = 0; i < n_photos; ++i) {
        PhotoMeta p;
        p.photo_id = "p" + std::to_string(i);
        p.owner_id = "u" + std::to_string(i % 50);
        p.point = {41.9 + rng.uniform() * 0.02, 12.49 + rng.uniform() * 0.02};
        photos.push_back(p);
    }
    std::vector<LocationRecord> locations;
    for (std::size_t i = 0; i < 50; ++i) {
        const std::string id = "L" + std::to_string(i);
        locations.push_back({id, id,
                             {41.9 + rng.uniform() * 0.02, 12.49 + rng.uniform() * 0.02},
                             ClassLabel::from_rating(3.0)});
    }
    for (auto _ : state) {
        auto assignment = assign_photos(photos, locations, 100.0);
        benchmark::DoNotOptimize(assignment);
    }
}

void bm_smote_balance(benchmark::State& state) {
    Dataset ds = synthetic_dataset(static_cast<std::size_t>(state.range(0)), 4, 2);
    for (auto _ : state) {
        Dataset balanced = balance(ds, SmoteParams{}, 7);
        benchmark::DoNotOptimize(balanced);
    }
}

void bm_train_tree(benchmark::State& state) {
    Dataset ds = synthetic_dataset(static_cast<std::size_t>(state.range(0)), 4, 3);
    for (auto _ : state) {
        Model model = train_tree(ds, j48_params(), 5);
        benchmark::DoNotOptimize(model);
    }
}

void bm_train_forest(benchmark::State& state) {
    Dataset ds = synthetic_dataset(400, 4, 4);
    const ForestParams forest{50, 4, true};
    const TreeParams tree{Criterion::info_gain, 1, 0, Pruning::none, 0.25, 1.0 / 3.0};
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Model model = train_forest(ds, forest, tree, 5, threads);
        benchmark::DoNotOptimize(model);
    }
}

void bm_boost(benchmark::State& state) {
    Dataset ds = synthetic_dataset(300, 4, 6);
    LearnerSpec spec = make_learner(LearnerKind::j48);
    for (auto _ : state) {
        Model model = boost(spec, ds, static_cast<std::size_t>(state.range(0)), 9);
        benchmark::DoNotOptimize(model);
    }
}

BENCHMARK(bm_haversine_join)->Arg(1000)->Arg(10000);
BENCHMARK(bm_smote_balance)->Arg(200)->Arg(1000);
BENCHMARK(bm_train_tree)->Arg(200)->Arg(1000);
BENCHMARK(bm_train_forest)->Arg(1)->Arg(4);
BENCHMARK(bm_boost)->Arg(5)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
