#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace scenic::csv {

// RFC-4180 reader: quoted fields, embedded commas/quotes/newlines,
// LF or CRLF line endings. Tracks the physical line number where each
// record starts so parse errors can point at the offending line.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    // Next record, or nullopt at end of input.
    std::optional<std::vector<std::string>> next();

    // 1-based line number of the most recently returned record.
    std::size_t line() const { return record_line_; }

private:
    std::istream& in_;
    std::size_t cur_line_ = 1;
    std::size_t record_line_ = 0;
};

// Quote a field if it contains a comma, quote, or newline.
std::string quote(const std::string& field);

std::string join(const std::vector<std::string>& fields);

}  // namespace scenic::csv
