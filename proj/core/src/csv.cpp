#include "scenic/csv.hpp"

namespace scenic::csv {

std::optional<std::vector<std::string>> Reader::next() {
    int ci = in_.get();
    if (ci == EOF) return std::nullopt;

    record_line_ = cur_line_;
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;

    for (;;) {
        if (ci == EOF) {
            fields.push_back(std::move(field));
            return fields;
        }
        char c = static_cast<char>(ci);
        if (quoted) {
            if (c == '"') {
                int peek = in_.peek();
                if (peek == '"') {
                    in_.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++cur_line_;
                field.push_back(c);
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && in_.peek() == '\n') in_.get();
            ++cur_line_;
            fields.push_back(std::move(field));
            return fields;
        } else {
            field.push_back(c);
        }
        ci = in_.get();
    }
}

std::string quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += '"';
    return out;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += quote(fields[i]);
    }
    return out;
}

}  // namespace scenic::csv
