#pragma once

#include <optional>
#include <vector>

#include "scenic/dataset.hpp"
#include "scenic/rng.hpp"

namespace scenic {

struct SmoteParams {
    std::size_t k_neighbors = 5;
    // Per-class target size. Exactly one may be set; with neither, each
    // class is brought up to the majority-class count.
    std::optional<std::size_t> target_count;
    std::optional<double> target_percent;  // 200.0 doubles a class, etc.
};

// Generate n_synthetic interpolated points from one class's rows.
// Each synthetic point is x + u * (nbr - x) with x chosen round-robin over
// the rows, nbr one of x's k nearest same-class neighbors (Euclidean, raw
// feature space, equidistant ties broken toward the lower row index) and
// u uniform in [0, 1). Effective k is min(k, |rows| - 1); a singleton
// class interpolates with itself, reproducing the same point.
std::vector<FeatureVector> smote_class(const std::vector<FeatureVector>& rows,
                                       std::size_t n_synthetic, std::size_t k, Rng& rng);

// Oversample every class up to the target (default: majority-class count).
// Original rows are preserved verbatim and precede all synthetic rows;
// synthetic rows are appended per class in class_set order, each class
// drawing from an independently seeded substream.
Dataset balance(const Dataset& ds, const SmoteParams& params, std::uint64_t seed);

}  // namespace scenic
