#include "scenic/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "scenic/csv.hpp"
#include "scenic/error.hpp"

namespace scenic {

const std::array<std::string, kNumFeatures> kFeatureNames = {
    "photo_density",      "total_views",     "total_favorites",
    "total_comments",     "avg_views",       "avg_favorites",
    "avg_comments",       "fav_to_view_ratio", "comment_to_view_ratio",
    "distinct_users",     "max_photos_per_user"};

std::vector<std::size_t> Dataset::class_counts() const {
    std::vector<std::size_t> counts(class_set.size(), 0);
    for (const auto& row : rows) ++counts.at(row.label);
    return counts;
}

namespace {

// shortest round-trip representation
std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

double parse_feature(const std::string& s, std::size_t line) {
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        throw DataError("line " + std::to_string(line) + ": invalid feature value '" + s + "'");
    return v;
}

}  // namespace

void write_dataset(std::ostream& out, const Dataset& ds) {
    const bool with_synthetic =
        std::any_of(ds.rows.begin(), ds.rows.end(), [](const auto& r) { return r.synthetic; });
    out << "location_id";
    for (const auto& name : kFeatureNames) out << ',' << name;
    out << ",label";
    if (with_synthetic) out << ",synthetic";
    out << '\n';
    for (const auto& row : ds.rows) {
        out << csv::quote(row.location_id);
        for (double f : row.features) out << ',' << format_double(f);
        out << ',' << ds.class_set.at(row.label).str();
        if (with_synthetic) out << ',' << (row.synthetic ? "true" : "false");
        out << '\n';
    }
}

Dataset read_dataset(std::istream& in) {
    csv::Reader reader(in);
    auto header = reader.next();
    if (!header) throw DataError("dataset file is empty (header row required)");
    std::vector<std::string> want = {"location_id"};
    want.insert(want.end(), kFeatureNames.begin(), kFeatureNames.end());
    want.push_back("label");
    bool with_synthetic = false;
    if (header->size() == want.size() + 1 && header->back() == "synthetic") {
        with_synthetic = true;
        header->pop_back();
    }
    if (*header != want)
        throw DataError("bad dataset header '" + csv::join(*header) + "'");

    struct RawRow {
        FeatureVector fv;
        ClassLabel label;
    };
    std::vector<RawRow> raw;
    while (auto row = reader.next()) {
        if (row->size() == 1 && (*row)[0].empty()) continue;
        const std::size_t expected = kNumFeatures + 2 + (with_synthetic ? 1 : 0);
        if (row->size() != expected)
            throw DataError("line " + std::to_string(reader.line()) + ": expected " +
                            std::to_string(expected) + " fields, got " +
                            std::to_string(row->size()));
        FeatureVector fv;
        fv.location_id = (*row)[0];
        for (std::size_t i = 0; i < kNumFeatures; ++i)
            fv.features[i] = parse_feature((*row)[i + 1], reader.line());
        ClassLabel label = ClassLabel::from_string((*row)[kNumFeatures + 1]);
        if (with_synthetic) {
            const std::string& s = (*row)[kNumFeatures + 2];
            if (s != "true" && s != "false")
                throw DataError("line " + std::to_string(reader.line()) +
                                ": invalid synthetic flag '" + s + "'");
            fv.synthetic = s == "true";
        }
        raw.push_back({std::move(fv), label});
    }

    Dataset ds;
    std::map<ClassLabel, std::size_t> index;
    for (const auto& r : raw) index.emplace(r.label, 0);
    for (auto& [label, idx] : index) {
        idx = ds.class_set.size();
        ds.class_set.push_back(label);
    }
    ds.rows.reserve(raw.size());
    for (auto& r : raw) {
        r.fv.label = index.at(r.label);
        ds.rows.push_back(std::move(r.fv));
    }
    return ds;
}

}  // namespace scenic
