#pragma once

#include <array>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "scenic/geo.hpp"

namespace scenic {

inline constexpr std::size_t kNumFeatures = 11;

// Schema order is fixed; column semantics stay stable across files.
extern const std::array<std::string, kNumFeatures> kFeatureNames;

enum Feature : std::size_t {
    kPhotoDensity = 0,
    kTotalViews,
    kTotalFavorites,
    kTotalComments,
    kAvgViews,
    kAvgFavorites,
    kAvgComments,
    kFavToViewRatio,
    kCommentToViewRatio,
    kDistinctUsers,
    kMaxPhotosPerUser,
};

struct FeatureVector {
    std::string location_id;
    std::array<double, kNumFeatures> features{};
    std::size_t label = 0;  // index into Dataset::class_set
    bool synthetic = false;
};

struct Dataset {
    std::vector<ClassLabel> class_set;  // ascending rating order
    std::vector<FeatureVector> rows;

    std::size_t n_classes() const { return class_set.size(); }

    // rows per class, indexed like class_set
    std::vector<std::size_t> class_counts() const;
};

// Dataset CSV: location_id, the 11 features, label, and (on write when any
// row is synthetic, on read when present) a trailing `synthetic` column.
void write_dataset(std::ostream& out, const Dataset& ds);
Dataset read_dataset(std::istream& in);

}  // namespace scenic
