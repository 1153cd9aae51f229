#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

namespace scenic {

inline constexpr double kEarthRadiusM = 6'371'000.0;

struct GeoPoint {
    double lat = 0.0;  // degrees WGS84, [-90, 90]
    double lon = 0.0;  // degrees WGS84, [-180, 180]
};

// Aesthetic rating on the 0.5 grid from 2.0 to 5.0, stored in tenths
// (20, 25, ..., 50) so labels compare and hash exactly.
class ClassLabel {
public:
    static ClassLabel from_rating(double rating);       // throws DataError off-grid
    static ClassLabel from_string(const std::string&);  // accepts "4", "4.0", "4.5"

    double rating() const { return tenths_ / 10.0; }
    int tenths() const { return tenths_; }
    std::string str() const;  // "4" or "4.5"

    friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;

private:
    explicit ClassLabel(int tenths) : tenths_(tenths) {}
    int tenths_;
};

struct PhotoMeta {
    std::string photo_id;
    std::string owner_id;
    GeoPoint point;
    std::uint64_t views = 0;
    std::uint64_t favorites = 0;
    std::uint64_t comments = 0;
};

struct LocationRecord {
    std::string location_id;
    std::string name;
    GeoPoint point;
    ClassLabel label;
};

// Great-circle distance in meters on a sphere of radius kEarthRadiusM.
double haversine_m(const GeoPoint& a, const GeoPoint& b);

// CSV header: photo_id,owner_id,latitude,longitude,views,favorites,comments
std::vector<PhotoMeta> parse_photos(std::istream& in);

// CSV header: location_id,name,latitude,longitude,rating
std::vector<LocationRecord> parse_locations(std::istream& in);

// Photo indices per location_id. A photo lands under every location with
// haversine_m(photo, location) <= radius_m (closed disk); locations with
// no photos map to an empty list. Order within a location follows photo
// input order.
using Assignment = std::unordered_map<std::string, std::vector<std::size_t>>;
Assignment assign_photos(const std::vector<PhotoMeta>& photos,
                         const std::vector<LocationRecord>& locations,
                         double radius_m);

}  // namespace scenic
