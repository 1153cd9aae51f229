#include "scenic/geo.hpp"

#include <charconv>
#include <cmath>
#include <unordered_set>

#include "scenic/csv.hpp"
#include "scenic/error.hpp"

namespace scenic {

namespace {

double to_radians(double deg) { return deg * M_PI / 180.0; }

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw DataError("line " + std::to_string(line) + ": " + msg);
}

double parse_double(const std::string& s, std::size_t line, const char* what) {
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
        fail(line, std::string("invalid ") + what + " '" + s + "'");
    return v;
}

std::uint64_t parse_count(const std::string& s, std::size_t line, const char* what) {
    if (!s.empty() && s[0] == '-')
        fail(line, std::string(what) + " must be non-negative, got '" + s + "'");
    std::uint64_t v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail(line, std::string("invalid ") + what + " '" + s + "'");
    return v;
}

GeoPoint parse_point(const std::string& lat_s, const std::string& lon_s, std::size_t line) {
    GeoPoint p{parse_double(lat_s, line, "latitude"), parse_double(lon_s, line, "longitude")};
    if (p.lat < -90.0 || p.lat > 90.0)
        fail(line, "latitude " + lat_s + " out of [-90, 90]");
    if (p.lon < -180.0 || p.lon > 180.0)
        fail(line, "longitude " + lon_s + " out of [-180, 180]");
    return p;
}

void expect_header(csv::Reader& r, const std::vector<std::string>& want, const char* kind) {
    auto row = r.next();
    if (!row)
        throw DataError(std::string(kind) + " file is empty (header row required)");
    if (*row != want)
        fail(r.line(), std::string("bad ") + kind + " header '" + csv::join(*row) + "'");
}

}  // namespace

ClassLabel ClassLabel::from_rating(double rating) {
    double scaled = rating * 10.0;
    int tenths = static_cast<int>(std::lround(scaled));
    if (std::abs(scaled - tenths) > 1e-9 || tenths % 5 != 0 || tenths < 20 || tenths > 50)
        throw DataError("rating " + std::to_string(rating) +
                        " is not one of {2.0, 2.5, ..., 5.0}");
    return ClassLabel(tenths);
}

ClassLabel ClassLabel::from_string(const std::string& s) {
    double v;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw DataError("invalid rating '" + s + "'");
    return from_rating(v);
}

std::string ClassLabel::str() const {
    if (tenths_ % 10 == 0) return std::to_string(tenths_ / 10);
    return std::to_string(tenths_ / 10) + "." + std::to_string(tenths_ % 10);
}

double haversine_m(const GeoPoint& a, const GeoPoint& b) {
    const double lat1 = to_radians(a.lat);
    const double lat2 = to_radians(b.lat);
    const double dlat = lat2 - lat1;
    const double dlon = to_radians(b.lon - a.lon);
    const double s1 = std::sin(dlat / 2.0);
    const double s2 = std::sin(dlon / 2.0);
    const double h = s1 * s1 + std::cos(lat1) * std::cos(lat2) * s2 * s2;
    return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

std::vector<PhotoMeta> parse_photos(std::istream& in) {
    csv::Reader reader(in);
    expect_header(reader,
                  {"photo_id", "owner_id", "latitude", "longitude", "views", "favorites",
                   "comments"},
                  "photo");
    std::vector<PhotoMeta> photos;
    std::unordered_set<std::string> seen;
    while (auto row = reader.next()) {
        if (row->size() == 1 && (*row)[0].empty()) continue;  // trailing newline
        if (row->size() != 7)
            fail(reader.line(), "expected 7 fields, got " + std::to_string(row->size()));
        PhotoMeta p;
        p.photo_id = (*row)[0];
        p.owner_id = (*row)[1];
        p.point = parse_point((*row)[2], (*row)[3], reader.line());
        p.views = parse_count((*row)[4], reader.line(), "views");
        p.favorites = parse_count((*row)[5], reader.line(), "favorites");
        p.comments = parse_count((*row)[6], reader.line(), "comments");
        if (!seen.insert(p.photo_id).second)
            fail(reader.line(), "duplicate photo_id '" + p.photo_id + "'");
        photos.push_back(std::move(p));
    }
    return photos;
}

std::vector<LocationRecord> parse_locations(std::istream& in) {
    csv::Reader reader(in);
    expect_header(reader, {"location_id", "name", "latitude", "longitude", "rating"},
                  "location");
    std::vector<LocationRecord> locations;
    std::unordered_set<std::string> seen;
    while (auto row = reader.next()) {
        if (row->size() == 1 && (*row)[0].empty()) continue;
        if (row->size() != 5)
            fail(reader.line(), "expected 5 fields, got " + std::to_string(row->size()));
        ClassLabel label = [&] {
            try {
                return ClassLabel::from_string((*row)[4]);
            } catch (const DataError& e) {
                fail(reader.line(), e.what());
            }
        }();
        LocationRecord loc{(*row)[0], (*row)[1],
                           parse_point((*row)[2], (*row)[3], reader.line()), label};
        if (!seen.insert(loc.location_id).second)
            fail(reader.line(), "duplicate location_id '" + loc.location_id + "'");
        locations.push_back(std::move(loc));
    }
    return locations;
}

Assignment assign_photos(const std::vector<PhotoMeta>& photos,
                         const std::vector<LocationRecord>& locations, double radius_m) {
    Assignment out;
    out.reserve(locations.size());
    for (const auto& loc : locations) out[loc.location_id];  // empty list default
    for (std::size_t i = 0; i < photos.size(); ++i) {
        for (const auto& loc : locations) {
            if (haversine_m(photos[i].point, loc.point) <= radius_m)
                out[loc.location_id].push_back(i);
        }
    }
    return out;
}

}  // namespace scenic
