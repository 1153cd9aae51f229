#include "scenic/features.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "scenic/csv.hpp"
#include "scenic/error.hpp"

namespace scenic {

FeatureVector extract_features(const LocationRecord& location,
                               const std::vector<PhotoMeta>& photos) {
    FeatureVector fv;
    fv.location_id = location.location_id;

    const double n = static_cast<double>(photos.size());
    double views = 0, favorites = 0, comments = 0;
    std::unordered_map<std::string, std::size_t> per_user;
    for (const auto& p : photos) {
        views += static_cast<double>(p.views);
        favorites += static_cast<double>(p.favorites);
        comments += static_cast<double>(p.comments);
        ++per_user[p.owner_id];
    }
    std::size_t max_per_user = 0;
    for (const auto& [user, count] : per_user) max_per_user = std::max(max_per_user, count);

    fv.features[kPhotoDensity] = n;
    fv.features[kTotalViews] = views;
    fv.features[kTotalFavorites] = favorites;
    fv.features[kTotalComments] = comments;
    fv.features[kAvgViews] = n > 0 ? views / n : 0.0;
    fv.features[kAvgFavorites] = n > 0 ? favorites / n : 0.0;
    fv.features[kAvgComments] = n > 0 ? comments / n : 0.0;
    fv.features[kFavToViewRatio] = views > 0 ? favorites / views : 0.0;
    fv.features[kCommentToViewRatio] = views > 0 ? comments / views : 0.0;
    fv.features[kDistinctUsers] = static_cast<double>(per_user.size());
    fv.features[kMaxPhotosPerUser] = static_cast<double>(max_per_user);
    return fv;
}

Dataset build_dataset(const Assignment& assignments, const std::vector<PhotoMeta>& photos,
                      const std::vector<LocationRecord>& locations, bool drop_empty) {
    Dataset ds;
    std::map<ClassLabel, std::size_t> index;

    struct Pending {
        FeatureVector fv;
        ClassLabel label;
    };
    std::vector<Pending> pending;
    for (const auto& loc : locations) {
        auto it = assignments.find(loc.location_id);
        std::vector<PhotoMeta> assigned;
        if (it != assignments.end()) {
            assigned.reserve(it->second.size());
            for (std::size_t idx : it->second) assigned.push_back(photos.at(idx));
        }
        if (drop_empty && assigned.empty()) continue;
        pending.push_back({extract_features(loc, assigned), loc.label});
        index.emplace(loc.label, 0);
    }
    for (auto& [label, idx] : index) {
        idx = ds.class_set.size();
        ds.class_set.push_back(label);
    }
    for (auto& p : pending) {
        p.fv.label = index.at(p.label);
        ds.rows.push_back(std::move(p.fv));
    }
    return ds;
}

std::vector<HistogramBin> feature_histograms(const Dataset& ds, std::size_t bins) {
    if (bins == 0) throw DataError("histogram bin count must be >= 1");
    std::vector<HistogramBin> out;
    for (std::size_t f = 0; f < kNumFeatures; ++f) {
        double lo = 0.0, hi = 0.0;
        if (!ds.rows.empty()) {
            lo = hi = ds.rows.front().features[f];
            for (const auto& row : ds.rows) {
                lo = std::min(lo, row.features[f]);
                hi = std::max(hi, row.features[f]);
            }
        }
        const bool degenerate = hi <= lo;
        const std::size_t n_bins = degenerate ? 1 : bins;
        const double width = degenerate ? 0.0 : (hi - lo) / static_cast<double>(bins);
        std::vector<HistogramBin> feature_bins(n_bins);
        for (std::size_t b = 0; b < n_bins; ++b) {
            feature_bins[b].feature = f;
            feature_bins[b].low = lo + width * static_cast<double>(b);
            feature_bins[b].high = b + 1 == n_bins ? hi : lo + width * static_cast<double>(b + 1);
            feature_bins[b].class_counts.assign(ds.n_classes(), 0);
        }
        for (const auto& row : ds.rows) {
            std::size_t b = 0;
            if (!degenerate) {
                b = static_cast<std::size_t>((row.features[f] - lo) / width);
                b = std::min(b, n_bins - 1);  // max value falls in the last bin
            }
            ++feature_bins[b].class_counts[row.label];
        }
        out.insert(out.end(), feature_bins.begin(), feature_bins.end());
    }
    return out;
}

void write_histograms(std::ostream& out, const Dataset& ds,
                      const std::vector<HistogramBin>& hist) {
    out << "feature,bin_low,bin_high,class,count\n";
    for (const auto& bin : hist) {
        for (std::size_t c = 0; c < bin.class_counts.size(); ++c) {
            out << kFeatureNames[bin.feature] << ',' << bin.low << ',' << bin.high << ','
                << ds.class_set[c].str() << ',' << bin.class_counts[c] << '\n';
        }
    }
}

}  // namespace scenic
