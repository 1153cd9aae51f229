#pragma once

#include <stdexcept>
#include <string>

namespace scenic {

// Malformed or inconsistent input data (bad CSV row, invalid rating, ...).
// The CLI maps this to exit code 2; everything else unexpected maps to 3.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace scenic
