#pragma once

#include <ostream>
#include <vector>

#include "scenic/dataset.hpp"
#include "scenic/geo.hpp"

namespace scenic {

// All 11 aggregate features for one location from its assigned photos.
// Empty photo lists and zero view totals yield zeros rather than NaNs.
FeatureVector extract_features(const LocationRecord& location,
                               const std::vector<PhotoMeta>& photos);

// One row per location, in location input order; class_set is the set of
// observed labels in ascending rating order. drop_empty removes
// zero-photo locations.
Dataset build_dataset(const Assignment& assignments,
                      const std::vector<PhotoMeta>& photos,
                      const std::vector<LocationRecord>& locations,
                      bool drop_empty = false);

struct HistogramBin {
    std::size_t feature;           // index into kFeatureNames
    double low = 0.0, high = 0.0;  // bin interval
    std::vector<std::size_t> class_counts;  // indexed like class_set
};

// Equal-width bins over each feature's [min, max]; a zero-range feature
// collapses to a single occupied bin. Counts per feature sum to |rows|.
std::vector<HistogramBin> feature_histograms(const Dataset& ds, std::size_t bins);

// CSV columns: feature,bin_low,bin_high,class,count
void write_histograms(std::ostream& out, const Dataset& ds,
                      const std::vector<HistogramBin>& hist);

}  // namespace scenic
