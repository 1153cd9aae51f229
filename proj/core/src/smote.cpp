#include "scenic/smote.hpp"

#include <algorithm>
#include <cmath>

#include "scenic/error.hpp"

namespace scenic {

namespace {

double squared_distance(const FeatureVector& a, const FeatureVector& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < kNumFeatures; ++i) {
        const double diff = a.features[i] - b.features[i];
        d += diff * diff;
    }
    return d;
}

// indices of the k nearest neighbors of rows[i] within rows, i excluded
std::vector<std::size_t> nearest_neighbors(const std::vector<FeatureVector>& rows,
                                           std::size_t i, std::size_t k) {
    std::vector<std::pair<double, std::size_t>> dists;
    dists.reserve(rows.size() - 1);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        if (j == i) continue;
        dists.emplace_back(squared_distance(rows[i], rows[j]), j);
    }
    std::sort(dists.begin(), dists.end());  // ties fall to the lower index
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k && j < dists.size(); ++j) out.push_back(dists[j].second);
    return out;
}

}  // namespace

std::vector<FeatureVector> smote_class(const std::vector<FeatureVector>& rows,
                                       std::size_t n_synthetic, std::size_t k, Rng& rng) {
    if (n_synthetic == 0) return {};
    if (rows.empty()) throw DataError("SMOTE on an empty class");
    if (k == 0) throw DataError("SMOTE requires k >= 1");

    const std::size_t eff_k = std::min(k, rows.size() - 1);
    std::vector<std::vector<std::size_t>> neighbors(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (eff_k == 0)
            neighbors[i] = {i};  // singleton class: sole neighbor is itself
        else
            neighbors[i] = nearest_neighbors(rows, i, eff_k);
    }

    std::vector<FeatureVector> synthetic;
    synthetic.reserve(n_synthetic);
    for (std::size_t s = 0; s < n_synthetic; ++s) {
        const FeatureVector& base = rows[s % rows.size()];
        const auto& nbrs = neighbors[s % rows.size()];
        const FeatureVector& nbr = rows[nbrs[rng.below(nbrs.size())]];
        const double u = rng.uniform();
        FeatureVector out;
        out.location_id = "synthetic_" + std::to_string(s) + "_of_" + base.location_id;
        out.label = base.label;
        out.synthetic = true;
        for (std::size_t f = 0; f < kNumFeatures; ++f)
            out.features[f] = base.features[f] + u * (nbr.features[f] - base.features[f]);
        synthetic.push_back(std::move(out));
    }
    return synthetic;
}

Dataset balance(const Dataset& ds, const SmoteParams& params, std::uint64_t seed) {
    if (params.k_neighbors == 0) throw DataError("SMOTE requires k >= 1");
    if (params.target_count && params.target_percent)
        throw DataError("set at most one of target_count / target_percent");

    const auto counts = ds.class_counts();
    for (std::size_t c = 0; c < counts.size(); ++c) {
        if (counts[c] == 0)
            throw DataError("class " + ds.class_set[c].str() + " has no rows to oversample");
    }
    const std::size_t majority = *std::max_element(counts.begin(), counts.end());

    Dataset out;
    out.class_set = ds.class_set;
    out.rows = ds.rows;  // originals verbatim, synthetic rows follow

    for (std::size_t c = 0; c < ds.n_classes(); ++c) {
        std::size_t target = majority;
        if (params.target_count) target = *params.target_count;
        if (params.target_percent)
            target = static_cast<std::size_t>(
                std::llround(static_cast<double>(counts[c]) * *params.target_percent / 100.0));
        if (target <= counts[c]) continue;

        std::vector<FeatureVector> class_rows;
        for (const auto& row : ds.rows)
            if (row.label == c) class_rows.push_back(row);

        Rng rng = Rng::substream(seed, c);
        auto synthetic =
            smote_class(class_rows, target - counts[c], params.k_neighbors, rng);
        for (auto& row : synthetic) out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace scenic
