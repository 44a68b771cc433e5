#include "hypermono/table.hpp"

#include <cstdio>

namespace hypermono {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_csv(std::ostream& os, const Table& t) {
    for (const auto& c : t.comments) os << "# " << c << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i)
        os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (size_t i = 0; i < row.size(); ++i)
            os << format_double(row[i]) << (i + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

nlohmann::ordered_json to_json(const Table& t) {
    nlohmann::ordered_json j;
    for (size_t c = 0; c < t.columns.size(); ++c) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& row : t.rows) arr.push_back(row[c]);
        j[t.columns[c]] = std::move(arr);
    }
    if (!t.comments.empty()) j["comments"] = t.comments;
    return j;
}

}  // namespace hypermono
